from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from bihom import _kernels

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    previous = _kernels.BACKEND
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(previous)


def rationals(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def vectors(dim, **kw):
    from bihom import Vector

    return st.lists(rationals(**kw), min_size=dim, max_size=dim).map(lambda c: Vector(tuple(c)))


def polarized_at(structure, report):
    """Recompute a failing report's polarized residual on the Fraction path:
    the raw formula summed over every reassignment of the witness indices
    among same-variable slots."""
    from itertools import permutations, product

    from bihom import Vector
    from bihom.identities import get_identity

    ops = structure.ops()
    parts = get_identity(report.identity).parts(ops)
    part = parts[0] if len(parts) == 1 else next(p for p in parts if p.label == report.notes)
    groups = {}
    for pos, v in enumerate(part.occurrences):
        groups.setdefault(v, []).append(pos)
    groups = list(groups.values())
    total = None
    for choice in product(*(permutations(g) for g in groups)):
        slots = [None] * len(part.occurrences)
        for g, perm in zip(groups, choice):
            for src, dst in zip(g, perm):
                slots[src] = report.witness[dst]
        term = part.evaluate(ops, *(Vector.basis(structure.dim, i) for i in slots))
        total = term if total is None else total + term
    return total


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
