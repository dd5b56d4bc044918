'''
Resolve the input of a command: a `{"fixture": NAME}` reference into the
bundled corpus, or an inline document of the command's kind.
'''

from corpus import load_fixture
from corpus.documents import (
    action_from_document, fd_action_from_document, semigroup_from_document,
    sign_data_from_document, space_from_document
)
from exceptions import PreconditionError, StructuralError
from fdalg import validate_fd_action

READERS = {
    'semigroup': semigroup_from_document,
    'space': lambda doc, cap: space_from_document(doc),
    'action': action_from_document,
    'fd-action': fd_action_from_document,
    'sign-data': lambda doc, cap: sign_data_from_document(doc),
}


def fixture_name(document):
    name = document.get('fixture')
    if name is not None and not isinstance(name, str):
        raise StructuralError('"fixture" must be a name')
    return name


def read_input(kind, document, config):
    '''Build the object of `kind` the document describes'''
    if not isinstance(document, dict):
        raise StructuralError('the input document must be a JSON object')
    name = fixture_name(document)
    if name is not None:
        return load_fixture(name, kind)
    if not document or set(document) <= {'options'}:
        raise StructuralError(f'no input: pass a {kind} document or --fixture')
    return READERS[kind](document, config.cap)


def read_fd_action(document, config):
    '''A finite-dimensional action that must pass validation'''
    action = read_input('fd-action', document, config)
    report = validate_fd_action(action, config.tol)
    if not report.valid:
        raise PreconditionError(f'invalid action: {report.rules()}')
    return action


def labelled_pair(S, witness):
    '''
    >>> from isg import sign_monoid
    >>> labelled_pair(sign_monoid(), {'e': 2, 't': 1})
    {'e': '0', 't': '-1'}
    '''
    if witness is None:
        return None
    return {key: S.label(value) for key, value in witness.items()}
