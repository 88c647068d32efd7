"""Some common utilities."""


def jsonable(value):
    """Converts a value into something ``json.dumps`` accepts.

    Objects can take part by implementing ``__json__``. Tuples and sets become lists, anything unknown
    becomes its string form.

    For example::

        >>> jsonable({"path": (1, 2), "subset": frozenset({2})})
        {'path': [1, 2], 'subset': [2]}
    """
    if hasattr(value, "__json__"):
        return jsonable(value.__json__())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=str)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def parse_indices(value):
    """Parses a comma separated list of 1-based indices.

    For example::

        >>> parse_indices("1, 2,3")
        (1, 2, 3)
        >>> parse_indices("")
        ()
    """
    value = (value or "").strip()
    if not value:
        return ()
    return tuple(int(i) for i in value.split(","))


def reduce_word(word):
    """Cancels adjacent repeated mutation directions since every mutation is an involution.

    For example::

        >>> reduce_word((1, 2, 2, 1, 3))
        (3,)
    """
    stack = []
    for letter in word:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def monomial_vectors(rank, bound):
    """Yields every nonnegative integer vector of length ``rank`` with total degree at most ``bound`` in a
    deterministic order (by total degree, then lexicographically descending)."""
    for total in range(bound + 1):
        yield from _compositions(rank, total)


def _compositions(rank, total):
    if rank == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(rank - 1, total - head):
            yield (head,) + tail
