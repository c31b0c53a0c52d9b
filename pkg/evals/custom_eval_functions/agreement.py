def agreement(expected, output):
    return int(expected == output)


def valid_and_tight(output):
    """1 when a validity report says the inequality holds with equality somewhere."""
    return int(output.valid and output.tight)


def valid(output):
    return int(output.valid)
