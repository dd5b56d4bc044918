import pytest

from commands.groupoids import (
    germ_groupoid_command, hausdorff, units_closed_command, validate_action_command,
    verify_iterated
)
from corpus.documents import action_to_document
from corpus.fixtures import sierpinski_sign_action
from exceptions import PreconditionError

from ..support import make_config


@pytest.fixture
def zero_moving_document():
    return dict(action_to_document(sierpinski_sign_action()), zero_preserving=True)


class TestValidateAction():
    def test_a_fixture(self):
        assert(validate_action_command({'fixture': 'sign-sierpinski'}, make_config())['valid'])

    def test_violations_are_reported(self, zero_moving_document):
        report = validate_action_command(zero_moving_document, make_config())

        assert(not report['valid'])
        assert([v['rule'] for v in report['violations']] == ['zero-preserving'])


class TestGermGroupoid():
    def test_a_non_discrete_space(self):
        report = germ_groupoid_command({'fixture': 'sign-sierpinski'}, make_config())

        assert(report['arrows'] == ['[1,a]', '[1,b]', '[-1,b]'])
        assert(report['arrow_count'] == 3)
        assert(report['laws']['holds'])
        assert(not report['units_closed'])
        assert('discrete' not in report)

    def test_a_discrete_space(self):
        report = germ_groupoid_command({'fixture': 'z2-swap'}, make_config())

        discrete = report['discrete']

        assert(report['arrow_count'] == 4)
        assert(discrete['convolution_blocks'] == [2])
        assert(len(discrete['exact_sequences']) == 2)
        assert(all(check['holds'] for check in discrete['exact_sequences']))

    def test_invalid_actions_are_refused(self, zero_moving_document):
        with pytest.raises(PreconditionError):
            germ_groupoid_command(zero_moving_document, make_config())


class TestSeparation():
    def test_closed_units_on_a_space_that_is_not_hausdorff(self):
        report = hausdorff({'fixture': 'z2-three-point'}, make_config())

        assert(report == {'groupoid_hausdorff': False, 'space_hausdorff': False,
                          'units_closed': True})

    def test_a_discrete_action(self):
        report = hausdorff({'fixture': 'sign-discrete'}, make_config())

        assert(report['groupoid_hausdorff'])

    def test_the_criterion_names_its_element(self):
        report = units_closed_command({'fixture': 'sign-sierpinski'}, make_config())

        assert(not report['units_closed'])
        assert(not report['criterion']['holds'])
        assert(report['criterion']['witness'] == {'t': 1, 'label': '-1'})


class TestVerifyIterated():
    def test_a_seeded_run(self):
        report = verify_iterated({'fixture': 'natural-I2'}, make_config(seed=1))

        assert(report['holds'])
        assert(report['dim'] == 4)
        assert(report['blocks'] == [2])

    def test_the_sign_monoid_on_three_points_needs_no_seed(self):
        report = verify_iterated({'fixture': 'sign-discrete'}, make_config())

        assert(report['iso'] is True)
        assert(report['dim'] == 3)
        assert(report['blocks'] == [1, 1, 1])

    def test_reports_do_not_depend_on_the_seed(self):
        assert(verify_iterated({'fixture': 'natural-I2'}, make_config())
               == verify_iterated({'fixture': 'natural-I2'}, make_config(seed=9)))
