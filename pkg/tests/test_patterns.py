"""Pattern family {x*y} + {x + f(y)}: evaluation, scanning, abundance, literals."""

import random

import pytest

from monochrome import (
    Coloring,
    PatternVerdict,
    ScanConstraints,
    WindowParams,
    abundance_profile,
    enumerate_window,
    eval_poly,
    format_element,
    format_family,
    format_poly,
    make_family,
    parse_family,
    parse_poly,
    parse_ring_spec,
    pattern_color,
    pattern_elements,
    random_coloring,
    witness_scan,
    zero_const_poly,
)
from monochrome.prng import stream_value

Z = parse_ring_spec("Z")
ZI = parse_ring_spec("Zi")
GF2 = parse_ring_spec("GF(2)[x]")
GF3 = parse_ring_spec("GF(3)[x]")


def rand_elem(spec, rng):
    if spec is Z:
        return spec.integer(rng.randint(-20, 20))
    if spec is ZI:
        return spec.gaussian(rng.randint(-5, 5), rng.randint(-5, 5))
    return spec.poly([rng.randrange(spec.q) for _ in range(rng.randint(0, 3))])


def parity_coloring(n):
    w = enumerate_window(Z, WindowParams(n))
    return Coloring(w, 2, tuple(1 + (k % 2) for k in range(1, n + 1)))


# ---------------------------------------------------------------------------
# Polynomials with zero constant term


def test_eval_poly_examples():
    f = parse_poly(Z, "t^2+2t")
    assert eval_poly(f, Z.integer(3)) == Z.integer(15)
    zero = parse_poly(Z, "0")
    assert eval_poly(zero, Z.integer(9)) == Z.zero
    frob = parse_poly(GF2, "t^2")
    assert eval_poly(frob, GF2.poly((1, 1))) == GF2.poly((1, 0, 1))


def test_eval_poly_at_zero_is_zero():
    rng = random.Random(1)
    for spec in (Z, ZI, GF3):
        f = zero_const_poly(spec, {1: rand_elem(spec, rng), 3: rand_elem(spec, rng)})
        assert eval_poly(f, spec.zero) == spec.zero


def test_constant_term_rejected():
    with pytest.raises(ValueError):
        zero_const_poly(Z, {0: Z.integer(1)})


def test_zero_coefficients_dropped():
    f = zero_const_poly(Z, {1: Z.integer(0), 2: Z.integer(3)})
    assert f.degree == 2
    assert f.coeff(1) == Z.zero
    assert f.coeff(2) == Z.integer(3)


def test_family_sorted_and_deduplicated():
    fam = make_family(Z, [parse_poly(Z, "t^2"), parse_poly(Z, "t"), parse_poly(Z, "t")])
    assert len(fam) == 2
    assert [format_poly(f) for f in fam] == ["t", "t^2"]


def test_family_must_be_nonempty():
    with pytest.raises(ValueError):
        make_family(Z, [])


# ---------------------------------------------------------------------------
# Pattern instances


def test_pattern_elements_examples():
    fam = parse_family(Z, "t")
    inst = pattern_elements(Z.integer(2), Z.integer(3), fam)
    assert [e.val for e in inst.elements] == [6, 5]

    triple = parse_family(Z, "0;t")
    inst = pattern_elements(Z.integer(2), Z.integer(3), triple)
    assert [e.val for e in inst.elements] == [6, 2, 5]

    degenerate = pattern_elements(Z.integer(2), Z.integer(2), fam)
    assert [e.val for e in degenerate.elements] == [4]
    assert degenerate.degenerate


def test_pattern_elements_ring_mismatch():
    with pytest.raises(ValueError):
        pattern_elements(Z.integer(1), ZI.gaussian(1, 0), parse_family(Z, "t"))


def test_product_always_first_and_size_bounded():
    rng = random.Random(3)
    for spec in (Z, ZI, GF3):
        fam = parse_family(spec, "t; t^2; 0")
        for _ in range(300):
            x, y = rand_elem(spec, rng), rand_elem(spec, rng)
            inst = pattern_elements(x, y, fam)
            assert inst.elements[0] == x * y
            assert 1 <= len(inst.elements) <= len(fam) + 1
            assert len(set(inst.elements)) == len(inst.elements)


def test_zero_and_linear_family_gives_sum_product_triple():
    rng = random.Random(4)
    for spec in (Z, ZI, GF2):
        fam = parse_family(spec, "0;t")
        for _ in range(300):
            x, y = rand_elem(spec, rng), rand_elem(spec, rng)
            inst = pattern_elements(x, y, fam)
            assert set(inst.elements) == {x * y, x, x + y}


# ---------------------------------------------------------------------------
# Monochromaticity


def test_pattern_color_examples():
    w = enumerate_window(Z, WindowParams(10))
    ones = Coloring(w, 1, (1,) * 10)
    fam = parse_family(Z, "t")
    assert pattern_color(ones, Z.integer(2), Z.integer(3), fam) == 1

    par = parity_coloring(10)
    # elements {6, 5} straddle the parity classes
    assert (
        pattern_color(par, Z.integer(2), Z.integer(3), fam)
        is PatternVerdict.NOT_MONOCHROMATIC
    )

    w5 = enumerate_window(Z, WindowParams(5))
    small = Coloring(w5, 1, (1,) * 5)
    assert (
        pattern_color(small, Z.integer(2), Z.integer(3), fam)
        is PatternVerdict.OUT_OF_WINDOW
    )


def test_scan_constraint_defaults():
    k = ScanConstraints.defaults_for(Z)
    assert not k.admits_y(Z.zero)
    assert not k.admits_y(Z.one)
    assert k.admits_y(Z.integer(2))
    assert not k.admits_x(Z.zero)
    assert k.admits_x(Z.one)
    assert k.require_in_window and k.forbid_degenerate


# ---------------------------------------------------------------------------
# Witness scan


def test_first_witness_on_all_one_coloring():
    w = enumerate_window(Z, WindowParams(9))
    ones = Coloring(w, 1, (1,) * 9)
    fam = parse_family(Z, "t")
    first = next(iter(witness_scan(ones, fam)))
    assert (first.x.val, first.y.val, first.color) == (1, 2, 1)


def test_degenerate_instances_surface_when_allowed():
    par = parity_coloring(20)
    fam = parse_family(Z, "t")
    k = ScanConstraints(
        exclude_y=frozenset({Z.zero, Z.one}),
        exclude_x=frozenset({Z.zero}),
        forbid_degenerate=False,
    )
    pairs = {(wit.x.val, wit.y.val) for wit in witness_scan(par, fam, k)}
    assert (2, 2) in pairs  # {4}: a singleton is vacuously one-colored
    default_pairs = {(wit.x.val, wit.y.val) for wit in witness_scan(par, fam)}
    assert (2, 2) not in default_pairs


def test_scan_order_is_y_outer_x_inner():
    w = enumerate_window(Z, WindowParams(30))
    c = random_coloring(w, 2, 3)
    fam = parse_family(Z, "t")
    keys = [(w.position(wit.y), w.position(wit.x)) for wit in witness_scan(c, fam)]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_scan_limit():
    w = enumerate_window(Z, WindowParams(30))
    c = Coloring(w, 1, (1,) * 30)
    fam = parse_family(Z, "t")
    assert len(list(witness_scan(c, fam, limit=5))) == 5
    assert list(witness_scan(c, fam, limit=0)) == []


def brute_force_scan_linear(n, r, seed):
    """Independent recount for F = {t} over {1..n}: recompute the coloring
    from the documented update rule and check {x*y, x+y} membership by hand."""
    color = {v: 1 + stream_value(seed, v - 1) % r for v in range(1, n + 1)}
    found = []
    for y in range(2, n + 1):  # y=0 impossible, y=1 excluded
        for x in range(1, n + 1):
            a, b = x * y, x + y
            if a == b:
                continue
            if a in color and b in color and color[a] == color[b]:
                found.append((x, y, color[a]))
    return found


def test_scan_matches_independent_recount():
    n, r, seed = 50, 2, 7
    w = enumerate_window(Z, WindowParams(n))
    c = random_coloring(w, r, seed)
    fam = parse_family(Z, "t")
    got = [(wit.x.val, wit.y.val, wit.color) for wit in witness_scan(c, fam)]
    oracle = brute_force_scan_linear(n, r, seed)
    assert sorted(got) == sorted(oracle)
    assert len(got) == 83  # frozen count for (N=50, r=2, seed=7)


def test_scan_without_window_requirement_judges_visible_part():
    w = enumerate_window(Z, WindowParams(6))
    c = parity_coloring(6)
    fam = parse_family(Z, "t")
    k = ScanConstraints(
        exclude_y=frozenset({Z.zero, Z.one}),
        exclude_x=frozenset({Z.zero}),
        require_in_window=False,
    )
    pairs = {(wit.x.val, wit.y.val): wit.color for wit in witness_scan(c, fam, k)}
    # x=4, y=2: product 8 escapes; visible part {6} is color 1
    assert pairs.get((4, 2)) == 1
    # under defaults the same pair is suppressed
    strict = {(wit.x.val, wit.y.val) for wit in witness_scan(c, fam)}
    assert (4, 2) not in strict


def test_scan_ring_mismatch():
    w = enumerate_window(Z, WindowParams(5))
    c = Coloring(w, 1, (1,) * 5)
    with pytest.raises(ValueError):
        list(witness_scan(c, parse_family(ZI, "t")))


# ---------------------------------------------------------------------------
# Abundance profiles


ALLOW_SINGLETONS = ScanConstraints(
    exclude_y=frozenset({Z.zero, Z.one}),
    exclude_x=frozenset({Z.zero}),
    forbid_degenerate=False,
)


def test_abundance_window_containment_only():
    w = enumerate_window(Z, WindowParams(100))
    ones = Coloring(w, 1, (1,) * 100)
    fam = parse_family(Z, "t")
    prof = abundance_profile(ones, fam, Z.integer(2), ALLOW_SINGLETONS)
    assert prof[1] == {Z.integer(v) for v in range(1, 51)}
    # under defaults x=2 drops out: {2*2, 2+2} collapses to the singleton {4}
    strict = abundance_profile(ones, fam, Z.integer(2))
    assert strict[1] == {Z.integer(v) for v in range(1, 51) if v != 2}


def test_abundance_parity_classes():
    w = enumerate_window(Z, WindowParams(100))
    par = parity_coloring(100)
    fam = parse_family(Z, "t")
    prof = abundance_profile(par, fam, Z.integer(2), ALLOW_SINGLETONS)
    assert prof[1] == {Z.integer(v) for v in range(2, 51, 2)}
    assert prof[2] == set()


def test_abundance_matches_pattern_color_pointwise():
    w = enumerate_window(Z, WindowParams(60))
    c = random_coloring(w, 2, 11)
    fam = parse_family(Z, "t^2")
    y = Z.integer(3)
    prof = abundance_profile(c, fam, y)
    assert not (prof[1] & prof[2])
    for x in w.elements:
        verdict = pattern_color(c, x, y, fam)
        for i in (1, 2):
            assert (x in prof[i]) == (verdict == i and not x.is_zero())


def test_abundance_rejects_excluded_y():
    w = enumerate_window(Z, WindowParams(10))
    c = Coloring(w, 1, (1,) * 10)
    fam = parse_family(Z, "t")
    with pytest.raises(ValueError):
        abundance_profile(c, fam, Z.one)


# ---------------------------------------------------------------------------
# Literals


def test_poly_literal_round_trips():
    cases = [
        (Z, "t"),
        (Z, "0"),
        (Z, "2t^2+t"),
        (Z, "-3t^4+2t"),
        (ZI, "(1+2i)t^3"),
        (GF2, "(x+1)t^2+xt"),
        (GF3, "2t^3+t"),
    ]
    for spec, text in cases:
        f = parse_poly(spec, text)
        assert format_poly(f) == text
        assert parse_poly(spec, format_poly(f)).terms == f.terms


def test_poly_literal_rejects_constant_terms():
    with pytest.raises(ValueError):
        parse_poly(Z, "t+1")
    with pytest.raises(ValueError):
        parse_poly(Z, "3")
    with pytest.raises(ValueError):
        parse_poly(Z, "")


def test_family_literal_round_trip():
    fam = parse_family(Z, "t; 0; 2t^2+t")
    assert format_family(fam) == "0; t; 2t^2+t"
    again = parse_family(Z, format_family(fam))
    assert format_family(again) == format_family(fam)


def test_family_literal_collapses_duplicates():
    fam = parse_family(Z, "t; t")
    assert len(fam) == 1


def test_char_collapse_in_small_characteristic():
    # over GF(2), 2t^2 + t = t
    fam = parse_family(GF2, "2t^2+t")
    assert format_family(fam) == "t"
