import pytest

from cominq import curves
from cominq.curves import (
    cominuscule_space, deg_dist, diameter, dx_table, gamma, gamma1, line_chain, parse_space,
    verify_all, verify_dx3, x_small,
)
from cominq.rootsys import ConfigurationError
from cominq.weyl import from_word, identity, longest_element, min_rep, parse_word, reduced_word

from conftest import CRITERION_SPACES

E7_GAMMA1_X1 = (1, 3, 4, 2, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7)


def rep(space, word):
    return min_rep(from_word(space.root_system, word), space.node)


def levi_nodes(space, d):
    """Diagram nodes of the Levi subgroup whose flag variety through the base point is X_d."""
    f, p = space.family, space.params
    if f == "GR":
        m = p[0]
        return set(range(m - d + 1, m + d))
    if f == "LG":
        n = p[0]
        return set(range(n - d + 1, n + 1))
    if f == "OG":
        n = p[0]
        return set(range(n - 2 * d + 1, n + 1))
    if f == "Q":
        return set(space.root_system.nodes)
    if f == "E6P6":
        return {2, 3, 4, 5, 6}
    return {2, 3, 4, 5, 6, 7} if d == 2 else set(range(1, 8))


@pytest.mark.parametrize("text,family,type_label,node", [
    ("Gr(2,5)", "GR", "A", 2), ("LG(3)", "LG", "C", 3), ("OG(5)", "OG", "D", 5),
    ("Q(5)", "Q", "B", 1), ("Q(6)", "Q", "D", 1), ("E6", "E6P6", "E6", 6), ("E7", "E7P7", "E7", 7),
    ("LG(3,6)", "LG", "C", 3), ("OG(5,10)", "OG", "D", 5), ("E6/P6", "E6P6", "E6", 6),
    ("Gr( 3 , 7 )", "GR", "A", 3),
])
def test_parse_space(text, family, type_label, node):
    sp = parse_space(text)
    assert (sp.family, sp.root_system.type_label, sp.node) == (family, type_label, node)


def test_quadric_ranks():
    assert parse_space("Q(7)").root_system.rank == 4
    assert parse_space("Q(8)").root_system.rank == 5


@pytest.mark.parametrize("bad", ["Gr(3,3)", "Gr(0,4)", "Gr(2)", "LG(1)", "OG(2)", "Q(2)", "E8", "P(3)", "", "LG(3,7)"])
def test_parse_space_errors(bad):
    with pytest.raises(ConfigurationError):
        parse_space(bad)


def test_cached_construction():
    assert cominuscule_space("GR", 2, 4) is cominuscule_space("GR", 2, 4)


@pytest.mark.parametrize("text,dim", [
    ("Gr(3,7)", 12), ("LG(4)", 10), ("OG(6)", 15), ("Q(7)", 7), ("Q(8)", 8), ("E6", 16), ("E7", 27),
])
def test_dimensions(text, dim):
    sp = parse_space(text)
    assert sp.dim == dim == curves.family_dimension(sp)


def test_deg_dist_examples():
    e6 = parse_space("E6")
    assert deg_dist(e6, identity(e6.root_system)) == 0
    assert deg_dist(e6, rep(e6, (6, 5, 4, 2, 3, 4, 5, 6))) == 2
    gr = parse_space("Gr(3,7)")
    assert deg_dist(gr, gr.wp.u_max) == 3
    with pytest.raises(ValueError):
        deg_dist(gr, from_word(gr.root_system, (1,)))


@pytest.mark.parametrize("text,d2", [("Q(5)", 2), ("E7", 3), ("Gr(2,6)", 2), ("E6", 2), ("LG(4)", 4), ("OG(6)", 3)])
def test_diameter_examples(text, d2):
    assert diameter(parse_space(text)) == d2


@pytest.mark.parametrize("text,d2,d3", [
    ("Gr(3,7)", 3, 4), ("Gr(1,5)", 1, 2), ("Gr(2,4)", 2, 2), ("OG(5,10)", 2, 3), ("E6", 2, 4),
    ("E7", 3, 3), ("LG(3)", 3, 3), ("Q(6)", 2, 2),
])
def test_dx_table_examples(text, d2, d3):
    t = dx_table(parse_space(text))
    assert (t.d2, t.d3) == (d2, d3)


def test_gamma_examples():
    gr = parse_space("Gr(2,4)")
    assert gamma1(gr, rep(gr, (2,))) == gr.wp.u_max
    assert gamma1(gr, gr.wp.u_max) == gr.wp.u_max

    e7 = parse_space("E7")
    x1 = rep(e7, (7,))
    g = gamma1(e7, x1)
    assert reduced_word(g) == E7_GAMMA1_X1
    assert g == from_word(e7.root_system, E7_GAMMA1_X1)
    assert gamma(e7, x1, 2) == e7.wp.u_max
    assert gamma1(e7, x_small(e7, 2)) == e7.wp.u_max
    assert gamma(e7, x1, 0) == x1
    with pytest.raises(ValueError):
        gamma(e7, x1, -1)


@pytest.mark.parametrize("text", ["Gr(2,5)", "Gr(3,7)", "LG(4)", "OG(6)", "Q(6)", "E6", "E7"])
def test_gamma_of_point_reaches_space_at_diameter(text):
    sp = parse_space(text)
    e = identity(sp.root_system)
    d2 = diameter(sp)
    assert gamma(sp, e, d2) == sp.wp.u_max
    assert gamma(sp, e, d2 - 1) != sp.wp.u_max


def test_line_chain_examples():
    e6 = parse_space("E6")
    assert line_chain(e6, identity(e6.root_system)) == [identity(e6.root_system)]
    u = rep(e6, (6, 5, 4, 2, 3, 4, 5, 6))
    assert line_chain(e6, u) == [identity(e6.root_system), rep(e6, (6,)), u]
    gr = parse_space("Gr(2,4)")
    assert reduced_word(gr.wp.u_max) == (2, 1, 3, 2)
    assert line_chain(gr, gr.wp.u_max) == [identity(gr.root_system), rep(gr, (2,)), gr.wp.u_max]


def test_x_small_examples():
    e7 = parse_space("E7")
    assert reduced_word(x_small(e7, 2)) == (7, 6, 5, 4, 2, 3, 4, 5, 6, 7)
    assert x_small(e7, 3) == e7.wp.u_max
    for text in ("Gr(2,5)", "E6", "Q(5)"):
        sp = parse_space(text)
        assert x_small(sp, 0).is_identity()
    gr = parse_space("Gr(3,5)")
    u = x_small(gr, 2)
    assert u.length == 4 and deg_dist(gr, u) == 2
    with pytest.raises(ValueError):
        x_small(gr, 3)


@pytest.mark.parametrize("text", CRITERION_SPACES)
def test_x_small_matches_levi_oracle(text):
    sp = parse_space(text)
    for d in range(2, diameter(sp) + 1):
        oracle = min_rep(longest_element(sp.root_system, levi_nodes(sp, d)), sp.node)
        assert x_small(sp, d) == oracle
        assert oracle.length == curves.x_small_length(sp, d)
        assert deg_dist(sp, oracle) == d


def test_e6_divisor():
    e6 = parse_space("E6")
    g = gamma1(e6, x_small(e6, 2))
    assert g.length == 15
    assert [u for u in e6.wp.reps if u.length == 15] == [g]


@pytest.mark.parametrize("text", ["Gr(2,5)", "E6", "LG(3,6)", "OG(6)", "E7", "Gr(4,8)"])
def test_verify_dx3(text):
    report = verify_dx3(parse_space(text))
    assert report.passed, report.lines()
    assert len(report.checks) == diameter(parse_space(text)) + 1


@pytest.mark.parametrize("text", ["Gr(3,6)", "LG(4)", "OG(5)", "Q(7)", "E6", "E7"])
def test_verify_all(text):
    report = verify_all(parse_space(text))
    assert report.passed, report.lines()
    names = {c.check for c in report.checks}
    assert {"word_independence", "gamma1_monotone", "saturation", "x_small", "dx3"} <= names


def test_word_independence_exhaustive_when_small():
    ok, detail = curves.word_independence(parse_space("Gr(3,6)"), cap=10_000)
    assert ok
    # every reduced word of every rep: the count exceeds one per representative
    assert int(detail.split()[0]) > len(parse_space("Gr(3,6)").wp)


@pytest.mark.parametrize("text", ["Gr(3,6)", "LG(4)", "E6"])
def test_gamma1_degree_step_observation(text):
    sp = parse_space(text)
    d2 = diameter(sp)
    for u in sp.wp.reps:
        assert deg_dist(sp, gamma1(sp, u)) <= deg_dist(sp, u) + 1
        assert deg_dist(sp, gamma1(sp, u)) == min(deg_dist(sp, u) + 1, d2)


def test_word_parsing_roundtrip_for_cli():
    e7 = parse_space("E7")
    assert rep(e7, parse_word("7")).length == 1
