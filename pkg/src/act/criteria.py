'''
Closed-units criterion on bisections: the germ [t, x] is a unit iff
x lies in D_{1,t}, the union of D_e over idempotents e <= t, so the
units are closed iff each D_{1,t} is relatively closed in D_{t*}.
'''

from report import Verdict

from .action import SpaceAction, with_unit


def d1t(action: SpaceAction, t):
    S = action.semigroup
    points = frozenset()
    for e in S.lower_bounds(S.unit, t):
        points = points | action.domain(e)
    return points


def criterion_d1t_closed(action: SpaceAction) -> Verdict:
    action = with_unit(action)
    S, X = action.semigroup, action.space
    table = {}
    witness = None
    for t in range(S.size):
        inner = d1t(action, t)
        closed = X.is_closed_in(inner, action.domain(t))
        table[S.label(t)] = {
            'd1t': X.names(inner),
            'domain': X.names(action.domain(t)),
            'closed': closed,
        }
        if not closed and witness is None:
            witness = {'t': t, 'label': S.label(t)}
    return Verdict(witness is None, witness, {'per_element': table})
