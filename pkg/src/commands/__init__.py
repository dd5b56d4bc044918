from .corpus_run import SUITES, corpus_run
from .crossed import crossed_product, expectation, induce_command, verify_01m1
from .groupoids import (
    germ_groupoid_command, hausdorff, units_closed_command, validate_action_command,
    verify_iterated
)
from .inputs import read_input
from .semigroups import (
    cross_check, e_unitary, spectrum, standard_corpus, validate_isg, validate_space_command
)

# command name -> handler(document, config) returning the JSON report
COMMANDS = {
    'validate-isg': validate_isg,
    'validate-space': validate_space_command,
    'validate-action': validate_action_command,
    'e-unitary': e_unitary,
    'spectrum': spectrum,
    'germ-groupoid': germ_groupoid_command,
    'hausdorff': hausdorff,
    'units-closed': units_closed_command,
    'cross-check-69': cross_check,
    'expectation': expectation,
    'crossed-product': crossed_product,
    'induce': induce_command,
    'verify-01m1': verify_01m1,
    'verify-iterated': verify_iterated,
    'corpus-run': corpus_run,
}

__all__ = [
    'COMMANDS',
    'SUITES',
    'read_input',
    'standard_corpus',
]
