import random

import pytest

from supportgenus.ribbon import (
    CurveClass,
    CurveMismatchError,
    MalformedSurfaceError,
    OpenBook,
    RibbonSurface,
    build_surface,
    dehn_twist_action,
    intersection_form,
    is_nonseparating,
    stabilize,
)
from supportgenus.zlinalg import IntMatrix


def test_disk():
    disk = build_surface(0, [])
    assert disk.euler_characteristic == 1
    assert disk.boundary_components == 1
    assert disk.genus == 0


def test_annulus():
    annulus = build_surface(1, [0, 0])
    assert annulus.euler_characteristic == 0
    assert annulus.boundary_components == 2
    assert annulus.genus == 0


def test_punctured_torus():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    assert torus.euler_characteristic == -1
    assert torus.boundary_components == 1
    assert torus.genus == 1
    assert torus.intersection[0][1] == 1
    assert torus.intersection[1][0] == -1


def test_pair_of_pants():
    pants = build_surface(2, [0, 0, 1, 1])
    assert pants.boundary_components == 3
    assert pants.genus == 0
    assert pants.intersection[0][1] == 0


def test_feet_order_validation():
    with pytest.raises(MalformedSurfaceError):
        build_surface(2, [0, 1, 0])  # wrong length
    with pytest.raises(MalformedSurfaceError):
        build_surface(2, [0, 0, 0, 1])  # band 0 three times
    with pytest.raises(MalformedSurfaceError):
        build_surface(1, [0, 2])  # label out of range
    with pytest.raises(MalformedSurfaceError):
        build_surface(1, [0, 0], twists=[1, 2])


def test_crossing_parity_enforced():
    # interleaved bands intersect once inside the disk, so an even
    # outside crossing count is inconsistent
    with pytest.raises(MalformedSurfaceError, match="crossing parity"):
        build_surface(2, [0, 1, 0, 1])
    with pytest.raises(MalformedSurfaceError, match="crossing parity"):
        build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 2})
    # nested bands are disjoint inside, so an odd count is inconsistent
    with pytest.raises(MalformedSurfaceError, match="crossing parity"):
        build_surface(2, [0, 0, 1, 1], crossings={(0, 1): 1})
    # matching parities are fine either way
    assert build_surface(2, [0, 1, 0, 1], crossings={(0, 1): -3}).genus == 1
    assert build_surface(2, [0, 0, 1, 1], crossings={(0, 1): 2}).boundary_components == 3


def test_nonorientable_bands_rejected():
    with pytest.raises(MalformedSurfaceError, match="orientab"):
        build_surface(1, [0, 0], orientation_preserving=[False])


def test_surface_equality_and_hash():
    a = build_surface(1, [0, 0], twists=[2])
    b = build_surface(1, [0, 0], twists=[2])
    assert a == b and hash(a) == hash(b)
    assert a != build_surface(1, [0, 0], twists=[3])


def test_curve_class_validation():
    pants = build_surface(2, [0, 0, 1, 1])
    CurveClass(pants, (1, -2))
    with pytest.raises(CurveMismatchError):
        CurveClass(pants, (1,))
    with pytest.raises(CurveMismatchError):
        CurveClass(pants, (1, 0), traversal=((0, 1), (1, 1)))  # wrong abelianization
    with pytest.raises(CurveMismatchError):
        CurveClass(pants, (1, 0), traversal=((0, 2),))  # bad sign
    with pytest.raises(CurveMismatchError):
        CurveClass(pants, (1, 0), traversal=((5, 1),))  # bad band


def test_is_nonseparating():
    pants = build_surface(2, [0, 0, 1, 1])
    assert is_nonseparating(pants, CurveClass(pants, (1, 0)))
    assert not is_nonseparating(pants, CurveClass(pants, (0, 0)))
    other = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    with pytest.raises(CurveMismatchError):
        is_nonseparating(pants, CurveClass(other, (1, 0)))


def random_surface(rng, max_bands=5):
    from supportgenus.ribbon import _foot_positions, _interleaving_form

    n = rng.randint(1, max_bands)
    feet = [band for band in range(n) for _ in range(2)]
    rng.shuffle(feet)
    # crossings must match the parity the feet interleaving forces
    iform = _interleaving_form(_foot_positions(feet, n), n)
    crossings = {}
    for i in range(n):
        for j in range(i + 1, n):
            count = iform[i][j] + 2 * rng.randint(-2, 2)
            if count:
                crossings[(i, j)] = count
    twists = tuple(rng.randint(-3, 3) for _ in range(n))
    return RibbonSurface(n, feet, twists, crossings)


def test_twist_action_preserves_form():
    rng = random.Random(23)
    for _ in range(120):
        surface = random_surface(rng)
        j = intersection_form(surface)
        curve = CurveClass(surface, tuple(rng.randint(-3, 3) for _ in range(surface.band_count)))
        sign = rng.choice((1, -1))
        m = dehn_twist_action(surface, curve, sign)
        assert m.transpose() @ j @ m == j
        assert m.mul_vec(curve.coefficients) == curve.coefficients


def test_twists_of_opposite_signs_invert():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    curve = CurveClass(torus, (2, -1))
    left = dehn_twist_action(torus, curve, -1)
    right = dehn_twist_action(torus, curve, 1)
    assert left @ right == IntMatrix.identity(2)


def test_twist_action_on_transverse_pair():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    a = CurveClass(torus, (1, 0))
    m = dehn_twist_action(torus, a, 1)
    # J a = (0, -1), so M = I + a (J a)^T = [[1, -1], [0, 1]]
    assert m == IntMatrix([[1, -1], [0, 1]])
    assert m.mul_vec((0, 1)) == (-1, 1)
    assert m.mul_vec((1, 0)) == (1, 0)


def test_twist_rejects_bad_sign():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    with pytest.raises(ValueError):
        dehn_twist_action(torus, CurveClass(torus, (1, 0)), 2)


def test_open_book_validation():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    pants = build_surface(2, [0, 0, 1, 1])
    curve = CurveClass(torus, (1, 0))
    OpenBook(page=torus, monodromy=((curve, 1), (curve, -1)))
    with pytest.raises(CurveMismatchError):
        OpenBook(page=pants, monodromy=((curve, 1),))
    with pytest.raises(ValueError):
        OpenBook(page=torus, monodromy=((curve, 0),))


def test_stabilize_once():
    annulus_book = stabilize(OpenBook(page=build_surface(0, [])), insert_at=(0, 1))
    page = annulus_book.page
    assert page.band_count == 1
    assert page.euler_characteristic == 0
    assert page.twists == (-1,)
    assert len(annulus_book.monodromy) == 1
    core, sign = annulus_book.monodromy[0]
    assert sign == 1 and core.coefficients == (1,)


def test_stabilize_twice_reaches_a_torus():
    book = OpenBook(page=build_surface(0, []))
    book = stabilize(book, insert_at=(0, 1))
    # interleave the second band with the first
    book = stabilize(book, insert_at=(1, 3))
    page = book.page
    assert page.feet_order == (0, 1, 0, 1)
    assert page.genus == 1
    assert page.euler_characteristic == -1
    assert [sign for _c, sign in book.monodromy] == [1, 1]
    # the crossing laid down matches the interleaving parity
    assert page.crossing_count(0, 1) % 2 == 1


def test_stabilize_lifts_existing_curves():
    torus = build_surface(2, [0, 1, 0, 1], crossings={(0, 1): 1})
    curve = CurveClass(torus, (1, 1), traversal=((0, 1), (1, 1)))
    book = stabilize(OpenBook(page=torus, monodromy=((curve, 1),)), insert_at=(4, 5))
    lifted, _sign = book.monodromy[0]
    assert lifted.coefficients == (1, 1, 0)
    assert book.page.euler_characteristic == torus.euler_characteristic - 1


def test_stabilize_rejects_bad_positions():
    book = OpenBook(page=build_surface(1, [0, 0]))
    with pytest.raises(MalformedSurfaceError):
        stabilize(book, insert_at=(2, 1))
    with pytest.raises(MalformedSurfaceError):
        stabilize(book, insert_at=(0, 4))
