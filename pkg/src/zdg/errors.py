class InputError(ValueError):
    """Bad user-supplied data: malformed files, unknown names, out-of-range parameters.

    Distinct from a *negative finding* (e.g. a table that turns out not to be
    associative): findings are reported in result objects, never raised.
    """
