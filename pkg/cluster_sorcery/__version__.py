__author__ = "Serkan Hosca"
__author_email__ = "serkan@hosca.com"
__version__ = "0.1.0"
__description__ = "Exact seed mutation, exchange graphs and g-pair verification for cluster algebras"
