import pytest

from eulertwist.continuants import cotwinned_subsets
from eulertwist.functorcat.enriques import (e4_objects, e5_objects, enriques_check,
                                            is_subcomplex, line_cube_complex, subcomplex)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_enriques_conclusions(n):
    rep = enriques_check(n)
    assert rep.passed, [c.name for c in rep.failures()]


def test_e4_has_one_dimensional_cohomology():
    C = line_cube_complex(4, e4_objects(2))
    h = C.cohomology()
    assert sum(h.values()) == 1


def test_e5_is_acyclic_and_c1_exact():
    objs = e5_objects(3)
    C = line_cube_complex(5, objs)
    assert C.is_acyclic()
    C1 = [key for key in C.basis if objs[key[0]] == ("O", 6)]
    assert len(C1) == 4 and is_subcomplex(C, C1) and subcomplex(C, C1).is_acyclic()


def test_objects_cover_cotwinned_subsets():
    assert set(e4_objects(2)) == {c.members for c in cotwinned_subsets(4)}
    assert set(e5_objects(2)) == {c.members for c in cotwinned_subsets(5)}


def test_missing_vertex_is_rejected():
    objs = dict(e4_objects(2))
    objs.pop(())
    with pytest.raises(ValueError):
        line_cube_complex(4, objs)


def test_n_must_be_positive():
    with pytest.raises(ValueError):
        enriques_check(0)
