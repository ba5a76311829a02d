"""Root system construction, conversions, and Weyl-orbit helpers."""

from fractions import Fraction

import pytest

from weightmult import (
    DimensionMismatch,
    InvalidType,
    RootSystem,
    build_root_system,
    dominant_conjugate,
    inner,
    is_under,
    orbit_size,
    root_to_weight_coords,
    weight_to_root_coords,
    weyl_dimension,
)

POSITIVE_ROOT_COUNTS = {
    ("A", 2): 3,
    ("A", 5): 15,
    ("B", 2): 4,
    ("B", 3): 9,
    ("C", 3): 9,
    ("D", 3): 6,
    ("D", 4): 12,
    ("G", 2): 6,
    ("F", 4): 24,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
}

WEYL_ORDERS = {
    ("A", 3): 24,
    ("B", 3): 48,
    ("C", 2): 8,
    ("D", 4): 192,
    ("G", 2): 12,
    ("F", 4): 1152,
    ("E", 6): 51840,
}


def reflect_root_coords(cartan, beta, i):
    """Simple reflection acting on root coordinates: subtract <beta, alpha_i^v> alpha_i."""
    pairing = sum(cartan[i][j] * bj for j, bj in enumerate(beta))
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def closure_positive_roots(rs):
    """All positive roots by reflecting the simples to a fixed point (independent oracle)."""
    frontier = {tuple(1 if k == i else 0 for k in range(rs.rank)) for i in range(rs.rank)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for beta in frontier:
            for i in range(rs.rank):
                image = reflect_root_coords(rs.cartan, beta, i)
                if image not in seen:
                    seen.add(image)
                    nxt.add(image)
        frontier = nxt
    return {beta for beta in seen if all(x >= 0 for x in beta)}


class TestConstruction:
    def test_a2_positive_roots(self):
        rs = build_root_system("A", 2)
        assert set(rs.pos_roots) == {(1, 0), (0, 1), (1, 1)}

    @pytest.mark.parametrize("family,rank", sorted(POSITIVE_ROOT_COUNTS))
    def test_positive_root_counts(self, family, rank):
        rs = build_root_system(family, rank)
        assert len(rs.pos_roots) == POSITIVE_ROOT_COUNTS[(family, rank)]

    @pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)])
    def test_positive_roots_match_reflection_closure(self, family, rank):
        rs = build_root_system(family, rank)
        assert set(rs.pos_roots) == closure_positive_roots(rs)

    def test_simple_roots_come_first_then_heights_increase(self):
        rs = build_root_system("F", 4)
        for i in range(rs.rank):
            assert rs.pos_roots[i] == tuple(1 if k == i else 0 for k in range(rs.rank))
        heights = [sum(beta) for beta in rs.pos_roots[rs.rank:]]
        assert heights == sorted(heights)

    def test_g2_has_level_three_root(self):
        rs = build_root_system("G", 2)
        assert len(rs.pos_roots) == 6
        assert max(max(beta) for beta in rs.pos_roots) == 3

    def test_roots_through_each_simple_index(self):
        rs = build_root_system("B", 3)
        for j in range(rs.rank):
            expected = [i for i, beta in enumerate(rs.pos_roots) if beta[j] > 0]
            assert list(rs.roots_through[j]) == expected

    @pytest.mark.parametrize(
        "family,rank",
        [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("B", 1), ("C", 1), ("D", 2), ("A", 0), ("H", 3)],
    )
    def test_invalid_family_rank_pairs_rejected(self, family, rank):
        with pytest.raises(InvalidType):
            build_root_system(family, rank)

    @pytest.mark.parametrize("family,rank", sorted(WEYL_ORDERS))
    def test_weyl_group_orders(self, family, rank):
        assert build_root_system(family, rank).weyl_order == WEYL_ORDERS[(family, rank)]

    def test_rho_is_all_ones(self):
        for family, rank in [("A", 4), ("B", 3), ("G", 2)]:
            assert build_root_system(family, rank).rho == (1,) * rank

    def test_d3_matches_a3(self):
        d3 = build_root_system("D", 3)
        a3 = build_root_system("A", 3)
        assert len(d3.pos_roots) == len(a3.pos_roots)
        assert d3.weyl_order == a3.weyl_order

    def test_product_system_from_block_cartan(self):
        a1 = build_root_system("A", 1)
        block = ((2, 0), (0, 2))
        rs = RootSystem(block)
        assert rs.family_ranks == (("A", 1), ("A", 1))
        assert len(rs.pos_roots) == 2 * len(a1.pos_roots)
        assert rs.weyl_order == 4

    def test_check_weight_rejects_wrong_length(self):
        rs = build_root_system("A", 2)
        with pytest.raises(DimensionMismatch):
            rs.check_weight((1, 0, 0))


class TestBilinearForm:
    def test_fundamental_weight_against_simple_root(self):
        rs = build_root_system("A", 2)
        alpha1 = root_to_weight_coords(rs, (1, 0))
        assert inner(rs, (1, 0), alpha1) == 1
        assert inner(rs, (0, 1), alpha1) == 0

    def test_zero_weight_pairs_to_zero(self):
        rs = build_root_system("G", 2)
        assert inner(rs, (0, 0), (5, -3)) == 0

    def test_rho_norm_in_a2(self):
        rs = build_root_system("A", 2)
        assert inner(rs, rs.rho, rs.rho) == 2

    def test_short_roots_have_norm_two(self):
        for family, rank in [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)]:
            rs = build_root_system(family, rank)
            norms = {rs.norm_root(beta) for beta in rs.pos_roots}
            assert min(norms) == 2

    def test_scale_parameter_multiplies_the_form(self):
        plain = build_root_system("B", 2)
        scaled = build_root_system("B", 2, scale=Fraction(7, 3))
        v, w = (1, 2), (0, 1)
        assert inner(scaled, v, w) == Fraction(7, 3) * inner(plain, v, w)


class TestCoordinateConversions:
    def test_root_to_weight_a2(self):
        rs = build_root_system("A", 2)
        assert root_to_weight_coords(rs, (1, 1)) == (1, 1)

    def test_weight_to_root_a2_is_rational(self):
        rs = build_root_system("A", 2)
        assert weight_to_root_coords(rs, (1, 0)) == (Fraction(2, 3), Fraction(1, 3))

    def test_zero_round_trips(self):
        rs = build_root_system("F", 4)
        zero = (0, 0, 0, 0)
        assert root_to_weight_coords(rs, zero) == zero
        assert weight_to_root_coords(rs, zero) == zero

    @pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
    def test_conversions_invert_each_other(self, family, rank):
        rs = build_root_system(family, rank)
        for beta in rs.pos_roots:
            v = root_to_weight_coords(rs, beta)
            assert weight_to_root_coords(rs, v) == beta


class TestDominanceOrder:
    def test_difference_in_root_lattice(self):
        rs = build_root_system("A", 2)
        assert is_under(rs, (0, 0), (1, 1)) == (1, 1)

    def test_difference_outside_root_lattice(self):
        rs = build_root_system("A", 2)
        assert is_under(rs, (0, 0), (1, 0)) is None

    def test_equal_weights(self):
        rs = build_root_system("B", 3)
        assert is_under(rs, (1, 2, 0), (1, 2, 0)) == (0, 0, 0)

    def test_negative_coefficient_is_rejected(self):
        rs = build_root_system("A", 2)
        assert is_under(rs, (2, 2), (1, 1)) is None


class TestDominantConjugate:
    def test_a2_two_step_word(self):
        rs = build_root_system("A", 2)
        assert dominant_conjugate(rs, (-1, 0)) == ((0, 1), (1, 2))

    def test_already_dominant_gives_empty_word(self):
        rs = build_root_system("A", 2)
        assert dominant_conjugate(rs, (1, 1)) == ((1, 1), ())

    def test_rank_one_negation(self):
        rs = build_root_system("A", 1)
        assert dominant_conjugate(rs, (-3,)) == ((3,), (1,))

    def test_word_replays_to_the_representative(self):
        rs = build_root_system("B", 3)
        for mu in [(-2, 1, 0), (3, -1, -4), (0, 0, -1), (-1, -1, -1)]:
            rep, word = dominant_conjugate(rs, mu)
            assert all(x >= 0 for x in rep)
            image = mu
            for j in word:
                image = rs.reflect(image, j - 1)
            assert image == rep

    def test_idempotent(self):
        rs = build_root_system("G", 2)
        rep, _ = dominant_conjugate(rs, (-4, 1))
        assert dominant_conjugate(rs, rep) == (rep, ())


class TestWeylDimension:
    def test_rank_one_string(self):
        rs = build_root_system("A", 1)
        for n in range(6):
            assert weyl_dimension(rs, (n,)) == n + 1

    def test_a2_adjoint(self):
        assert weyl_dimension(build_root_system("A", 2), (1, 1)) == 8

    def test_a3_natural(self):
        assert weyl_dimension(build_root_system("A", 3), (1, 0, 0)) == 4

    def test_scale_invariance(self):
        lam = (1, 0, 2)
        plain = build_root_system("B", 3)
        scaled = build_root_system("B", 3, scale=Fraction(5, 2))
        assert weyl_dimension(plain, lam) == weyl_dimension(scaled, lam)


class TestOrbitSize:
    def test_fixed_point(self):
        assert orbit_size(build_root_system("A", 2), (0, 0)) == 1

    def test_regular_weight(self):
        assert orbit_size(build_root_system("A", 2), (1, 1)) == 6

    def test_weight_with_stabilizer(self):
        assert orbit_size(build_root_system("A", 2), (1, 0)) == 3

    @pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2), ("D", 4)])
    def test_orbit_size_matches_explicit_orbit(self, family, rank):
        rs = build_root_system(family, rank)
        samples = [(1,) * rank, (1,) + (0,) * (rank - 1), (0,) * (rank - 1) + (2,)]
        for mu in samples:
            orbit = {mu}
            frontier = [mu]
            while frontier:
                nxt = []
                for nu in frontier:
                    for i in range(rank):
                        image = rs.reflect(nu, i)
                        if image not in orbit:
                            orbit.add(image)
                            nxt.append(image)
                frontier = nxt
            assert orbit_size(rs, mu) == len(orbit)

    def test_orbit_size_divides_group_order(self):
        rs = build_root_system("F", 4)
        for mu in [(1, 0, 0, 0), (0, 1, 0, 1), (2, 0, 1, 0)]:
            assert rs.weyl_order % orbit_size(rs, mu) == 0
