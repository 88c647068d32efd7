"""
Signals
-------

Implements the signals emitted while mutating, exploring and verifying, using blinker.
"""
import blinker


all_signals = blinker.Namespace()

seed_mutated = all_signals.signal("seed_mutated")

exploration_started = all_signals.signal("exploration_started")
node_discovered = all_signals.signal("node_discovered")
exploration_finished = all_signals.signal("exploration_finished")

property_checked = all_signals.signal("property_checked")

engine_created = all_signals.signal("engine_created")
report_stored = all_signals.signal("report_stored")
