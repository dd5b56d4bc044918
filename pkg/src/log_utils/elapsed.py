from datetime import timedelta  # noqa pylint: disable=W0611


def elapsed_string(delta):
    '''
    Converts a timedelta to a short string.

    >>> elapsed_string(timedelta(milliseconds=850))
    '850ms'

    >>> elapsed_string(timedelta(seconds=55))
    '55s'

    >>> elapsed_string(timedelta(seconds=124))
    '2m 4s'
    '''
    total = delta.total_seconds()
    if total < 1:
        return f'{round(total * 1000)}ms'
    secs = int(total)
    if secs > 60:
        mins = int(secs // 60)
        secs = int(secs % 60)
        return f'{mins}m {secs}s'
    # else
    return f'{secs}s'
