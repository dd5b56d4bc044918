'''
Exceptions shared by every package.

`main.py` maps each class to an exit status, see `verify.EXIT_CODES`.
'''


class StructuralError(Exception):
    '''
    Malformed input: an index out of range, a dimension mismatch,
    an unparseable document.
    '''
    pass


class PreconditionError(StructuralError):
    pass


class ResourceError(Exception):
    '''A closure or a job exceeded its size cap or time budget'''
    pass


class ConditioningError(Exception):
    '''A Gram matrix has eigenvalues too close to zero to decide its rank'''
    pass


class AssertionFailure(Exception):
    '''
    A mathematical assertion failed.

    `witness` is a JSON-serialisable object pointing at the failure.

    >>> err = AssertionFailure('not associative', {'triple': [0, 1, 2]})
    >>> err.witness
    {'triple': [0, 1, 2]}
    >>> str(err)
    'not associative'
    '''
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalError(AssertionFailure):
    '''Two independent computations of the same quantity disagree'''
    pass
