"""
Free distributive lattices, De Morgan algebras and finite lattices.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubical_lab.config import Config
from cubical_lab.lattice import (
    Const,
    DeMorganElement,
    FiniteLattice,
    Join,
    LatticeElement,
    Meet,
    Neg,
    Var,
    dm_negate,
    embed_dl_in_dm,
    enumerate_dm,
    enumerate_free,
    evaluate,
    evaluate_dm,
    normalize,
    normalize_dm,
    parse_term,
    substitute,
)
from cubical_lab.utils.errors import CapacityError, InputError

DEDEKIND = [2, 3, 6, 20, 168]


def monotone_tables(n):
    """Truth tables of monotone Boolean functions, built as pairs f <= g on n - 1 variables."""
    tables = [(False,), (True,)]
    for _ in range(n):
        tables = [f + g for f in tables for g in tables
                  if all(a <= b for a, b in zip(f, g))]
    return tables


def boolean_value(term, bits):
    """Direct evaluation of a term AST on a Boolean assignment."""
    if isinstance(term, Var):
        return bits[term.index]
    if isinstance(term, Const):
        return term.value
    if isinstance(term, Neg):
        return not boolean_value(term.operand, bits)
    if isinstance(term, Meet):
        return boolean_value(term.left, bits) and boolean_value(term.right, bits)
    return boolean_value(term.left, bits) or boolean_value(term.right, bits)


def term_table(term, n):
    return tuple(boolean_value(term, [bool(mask >> i & 1) for i in range(n)]) for mask in range(2 ** n))


def terms(n, negation=False):
    leaves = st.one_of(st.builds(Var, st.integers(0, n - 1)), st.builds(Const, st.booleans()))

    def extend(children):
        options = [st.builds(Meet, children, children), st.builds(Join, children, children)]
        if negation:
            options.append(st.builds(Neg, children))
        return st.one_of(*options)

    return st.recursive(leaves, extend, max_leaves=8)


@st.composite
def term_pairs(draw):
    n = draw(st.integers(1, 4))
    return n, draw(terms(n)), draw(terms(n))


@pytest.mark.parametrize("n", range(5))
def test_dedekind_counts_match_oracle(n):
    elements = enumerate_free(n)
    assert len(elements) == DEDEKIND[n]
    assert len(set(elements)) == len(elements)
    assert {e.truth_table() for e in elements} == set(monotone_tables(n))


def test_enumeration_refuses_five_generators():
    with pytest.raises(CapacityError):
        enumerate_free(5)


def test_canonical_order_of_small_lattices():
    assert [str(e) for e in enumerate_free(1)] == ["0", "1", "x0"]
    assert [str(e) for e in enumerate_free(2)] == ["0", "1", "x0", "x0 v x1", "x0 ^ x1", "x1"]


def test_absorption():
    assert normalize("x0 v (x0 ^ x1)", 2).clauses == ((0,),)


def test_distributed_normal_form():
    assert normalize("(x0 v x1) ^ (x0 v x2)", 3).clauses == ((0,), (1, 2))


def test_constants():
    assert normalize("0 v 1", 0) == LatticeElement.top(0)
    assert normalize("0 ^ 1", 0) == LatticeElement.bottom(0)
    assert str(normalize("(x0 v x1) ^ (x0 v x1)", 2)) == "x0 v x1"


@pytest.mark.parametrize("text", ["x2", "x0 v x5"])
def test_generator_out_of_range(text):
    with pytest.raises(InputError):
        normalize(text, 2)


@pytest.mark.parametrize("text", ["x0 v", "(x0", "x0 + x1", "~"])
def test_malformed_terms(text):
    with pytest.raises(InputError):
        parse_term(text)


def test_negation_needs_de_morgan():
    with pytest.raises(InputError):
        normalize("~x0", 1)


@settings(max_examples=1000)
@given(term_pairs())
def test_normal_form_equality_is_function_equality(pair):
    n, left, right = pair
    same_form = normalize(left, n) == normalize(right, n)
    same_function = term_table(left, n) == term_table(right, n)
    assert same_form == same_function


@given(st.integers(0, 3).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(enumerate_free(n)),
                                                      st.sampled_from(enumerate_free(n)),
                                                      st.sampled_from(enumerate_free(n)))))
def test_lattice_laws(sample):
    _, a, b, c = sample
    assert a | (a & b) == a
    assert a & (a | b) == a
    assert a & (b | c) == (a & b) | (a & c)
    assert (a | b) | c == a | (b | c)
    assert a.leq(a | b)
    assert (a & b).leq(b)


def test_evaluate_in_finite_lattice():
    chain = FiniteLattice.chain(4)
    x0 = LatticeElement.generator(0, 1)
    for d in chain.elements:
        assert evaluate(x0, [d], chain) == d
    assert evaluate(normalize("x0 ^ x1", 2), ["a", "b"], chain) == "a"
    assert evaluate(normalize("x0 v x1", 2), ["a", "b"], chain) == "b"


def test_evaluate_on_unit_interval():
    element = normalize("(x0 ^ x1) v x2", 3)
    assert evaluate(element, [Fraction(1, 3), Fraction(1, 2), Fraction(1, 4)]) == Fraction(1, 3)
    with pytest.raises(InputError):
        evaluate(element, [Fraction(1, 2)])


@pytest.mark.parametrize("n, size", [(0, 2), (1, 6), (2, 168)])
def test_de_morgan_sizes(n, size):
    assert len(enumerate_dm(n)) == size


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(st.just(n), terms(n, negation=True))))
def test_de_morgan_involution_and_semantics(sample):
    n, term = sample
    element = normalize_dm(term, n)
    assert dm_negate(dm_negate(element)) == element
    point = [Fraction(1, 3), Fraction(3, 4)][:n]
    assert evaluate_dm(dm_negate(element), point) == 1 - evaluate_dm(element, point)


def test_de_morgan_printing_and_laws():
    assert str(normalize_dm("~(x0 v x1)", 2)) == "~x0 ^ ~x1"
    assert str(normalize_dm("~~x0", 1)) == "x0"
    assert normalize_dm("x0 ^ ~x0", 1) != normalize_dm("0", 1)


def test_embedding_into_de_morgan():
    element = normalize("x0 ^ x1", 2)
    assert embed_dl_in_dm(element) == normalize_dm("x0 ^ x1", 2)


def test_finite_lattice_constructors():
    chain = FiniteLattice.chain(3)
    assert chain.elements == ("0", "a", "1")
    assert chain.is_chain()
    square = FiniteLattice.boolean(2)
    assert square.size == 4
    assert square.join("a", "b") == "1"
    assert square.meet("a", "b") == "0"
    assert not square.is_chain()
    assert FiniteLattice.free(2).size == 6


def test_non_distributive_lattice_is_rejected():
    pairs = [("0", x) for x in "abc"] + [(x, "1") for x in "abc"]
    with pytest.raises(InputError):
        FiniteLattice.from_order(["0", "a", "b", "c", "1"], pairs)


def test_non_lattice_order_is_rejected():
    with pytest.raises(InputError):
        FiniteLattice.from_order(["a", "b"], [])


def test_lattice_dict_round_trip():
    lattice = FiniteLattice.boolean(2)
    again = FiniteLattice.from_dict(lattice.to_dict())
    assert again.elements == lattice.elements
    assert again.order == lattice.order


def test_nesting_limit(monkeypatch):
    with pytest.raises(InputError):
        parse_term("(" * 2000 + "x0" + ")" * 2000)
    with pytest.raises(InputError):
        parse_term("~" * 2000 + "x0")
    monkeypatch.setattr(Config, "MAX_TERM_DEPTH", 3)
    assert parse_term("((x0))") == Var(0)
    with pytest.raises(InputError):
        parse_term("((((x0))))")


def test_long_chains_are_not_nesting():
    assert str(normalize(" v ".join(["x0"] * 2000), 1)) == "x0"
    assert str(normalize(" ^ ".join(f"x{i % 3}" for i in range(1500)), 3)) == "x0 ^ x1 ^ x2"


MODELS = [FiniteLattice.chain(4), FiniteLattice.boolean(2), FiniteLattice.free(2)]


@st.composite
def evaluations(draw):
    n = draw(st.integers(0, 3))
    model = draw(st.sampled_from(MODELS))
    assignment = draw(st.lists(st.sampled_from(model.elements), min_size=n, max_size=n))
    elements = st.sampled_from(enumerate_free(n))
    return model, assignment, draw(elements), draw(elements)


@given(evaluations())
def test_evaluation_in_finite_lattices_is_a_homomorphism(sample):
    model, assignment, a, b = sample
    left, right = evaluate(a, assignment, model), evaluate(b, assignment, model)
    assert evaluate(a | b, assignment, model) == model.join(left, right)
    assert evaluate(a & b, assignment, model) == model.meet(left, right)
    n = len(assignment)
    assert evaluate(LatticeElement.top(n), assignment, model) == model.top
    assert evaluate(LatticeElement.bottom(n), assignment, model) == model.bottom


@given(st.integers(0, 3).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_free(n)), st.sampled_from(enumerate_free(n)),
    st.lists(st.fractions(0, 1, max_denominator=12), min_size=n, max_size=n))))
def test_evaluation_on_unit_interval_is_a_homomorphism(sample):
    a, b, point = sample
    assert evaluate(a | b, point) == max(evaluate(a, point), evaluate(b, point))
    assert evaluate(a & b, point) == min(evaluate(a, point), evaluate(b, point))


@st.composite
def substitution_triples(draw):
    n, m, k = (draw(st.integers(0, 3)) for _ in range(3))
    e = draw(st.sampled_from(enumerate_free(n)))
    first = draw(st.lists(st.sampled_from(enumerate_free(m)), min_size=n, max_size=n))
    second = draw(st.lists(st.sampled_from(enumerate_free(k)), min_size=m, max_size=m))
    return e, first, m, second, k


@given(substitution_triples())
def test_substitution_units(triple):
    e, images, m, _, _ = triple
    n = e.n_generators
    generators = [LatticeElement.generator(i, n) for i in range(n)]
    assert substitute(e, generators, n_target=n) == e
    for i in range(n):
        assert substitute(generators[i], images, n_target=m) == images[i]


@settings(max_examples=200)
@given(substitution_triples())
def test_composed_substitution_is_one_shot_substitution(triple):
    e, first, m, second, k = triple
    stepwise = substitute(substitute(e, first, n_target=m), second, n_target=k)
    composite = [substitute(image, second, n_target=k) for image in first]
    assert stepwise == substitute(e, composite, n_target=k)


def test_de_morgan_negation_reverses_the_lattice_operations():
    elements = enumerate_dm(1)
    for a in elements:
        for b in elements:
            assert dm_negate(a | b) == dm_negate(a) & dm_negate(b)
            assert dm_negate(a & b) == dm_negate(a) | dm_negate(b)
    assert dm_negate(DeMorganElement.constant(False, 1)) == DeMorganElement.constant(True, 1)
