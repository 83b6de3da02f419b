from fractions import Fraction

import numpy as np
import pytest

from spinorkit import (
    I,
    GaussianRational,
    Multivector,
    Signature,
    SignatureError,
    SignatureMismatchError,
    bar,
    blade,
    center,
    commutator,
    even_part,
    generator,
    inverse,
    orientation_operator,
    orientation_projectors,
    scalar,
    vector,
)
from spinorkit.multivector import blade_product, grade, multiplication_matrix


def test_generators_square_to_metric_signs():
    sig = Signature(2, 3)
    for mu in range(sig.n):
        g = generator(sig, mu)
        assert g * g == scalar(sig, sig.metric_sign(mu))


def test_distinct_generators_anticommute():
    sig = Signature(3, 2)
    for mu in range(sig.n):
        for nu in range(mu + 1, sig.n):
            a, b = generator(sig, mu), generator(sig, nu)
            assert a * b == -(b * a)
            assert (a * b + b * a).is_zero()


def test_vector_square_is_quadratic_form():
    sig = Signature(1, 2)
    v = vector(sig, [3, 1, 2])
    assert v * v == scalar(sig, 9 - 1 - 4)


def test_blade_product_signs():
    sig = Signature(1, 1)
    # γ^1 γ^0 = -γ^0 γ^1
    assert blade_product(sig, 0b10, 0b01) == (-1, 0b11)
    # (γ^0 γ^1)^2 = -γ^0 γ^0 γ^1 γ^1 = -(+1)(-1) = +1
    assert blade_product(sig, 0b11, 0b11) == (1, 0)


def test_blade_orders_factors_as_given():
    sig = Signature(3, 0)
    assert blade(sig, [1, 0]) == -blade(sig, [0, 1])
    assert blade(sig, [2, 2]) == scalar(sig, 1)


def test_product_is_associative_on_exact_values():
    sig = Signature(2, 2)
    a = vector(sig, [1, 2, 0, -1]) + scalar(sig, Fraction(1, 3))
    b = blade(sig, [0, 3]) + generator(sig, 1) * 5
    c = blade(sig, [1, 2, 3]) - scalar(sig, 2)
    assert (a * b) * c == a * (b * c)


def test_signature_mismatch_is_rejected():
    with pytest.raises(SignatureMismatchError, match=r"\(1,0\) and \(0,1\)"):
        generator(Signature(1, 0), 0) * generator(Signature(0, 1), 0)
    with pytest.raises(ValueError):
        generator(Signature(1, 0), 0) + generator(Signature(2, 0), 0)


def test_out_of_range_generator():
    with pytest.raises(SignatureError):
        generator(Signature(2, 0), 2)


def test_bar_reverses_and_conjugates():
    sig = Signature(3, 0)
    e12 = blade(sig, [0, 1])
    assert bar(e12) == -e12
    e123 = blade(sig, [0, 1, 2])
    assert bar(e123) == -e123
    z = scalar(sig, I) + generator(sig, 0)
    assert bar(z) == scalar(sig, -I) + generator(sig, 0)


def test_bar_is_an_anti_automorphism():
    sig = Signature(2, 1)
    a = vector(sig, [1, 2, 3]) + blade(sig, [0, 2]) * I
    b = blade(sig, [1, 2]) + scalar(sig, Fraction(1, 2))
    assert bar(a * b) == bar(b) * bar(a)


def test_exact_coefficients_stay_exact():
    sig = Signature(1, 1)
    a = generator(sig, 0) * Fraction(1, 3) + scalar(sig, 2)
    assert a.is_exact
    assert all(isinstance(v, Fraction) for v in (a * a).terms.values())
    z = a * I
    assert z.is_complex
    assert isinstance(z.coefficient(0b01), GaussianRational)


def test_even_part_and_grades():
    sig = Signature(2, 0)
    a = scalar(sig, 1) + generator(sig, 0) + blade(sig, [0, 1])
    assert even_part(a) == scalar(sig, 1) + blade(sig, [0, 1])
    assert a.odd_part() == generator(sig, 0)
    assert a.grades() == (0, 1, 2)
    assert grade(0b111) == 3


@pytest.mark.parametrize("p, q", [(1, 0), (2, 0), (3, 1), (0, 3), (2, 2), (4, 1)])
def test_orientation_operator_square(p, q):
    sig = Signature(p, q)
    eps = orientation_operator(sig)
    n = sig.n
    expected = (-1) ** (n * (n - 1) // 2) * (-1) ** q
    assert eps * eps == scalar(sig, expected)
    assert sig.orientation_square() == expected


def test_orientation_operator_needs_generators():
    with pytest.raises(SignatureError):
        orientation_operator(Signature(0, 0))


def test_orientation_commutes_or_anticommutes_with_generators():
    for sig in (Signature(3, 1), Signature(3, 0)):
        eps = orientation_operator(sig)
        g = generator(sig, 0)
        if sig.n % 2:
            assert commutator(eps, g).is_zero()
        else:
            assert (eps * g + g * eps).is_zero()


def test_orientation_projectors():
    sig = Signature(2, 2)
    left, right = orientation_projectors(sig)
    one = scalar(sig, 1)
    assert left * left == left
    assert right * right == right
    assert (left * right).is_zero()
    assert left + right == one
    with pytest.raises(SignatureError):
        orientation_projectors(Signature(2, 0))


@pytest.mark.parametrize(
    "p, q, dim, even_dim",
    [(0, 0, 1, None), (2, 0, 1, 2), (3, 0, 2, 1), (1, 3, 1, 2), (4, 1, 2, 1), (0, 1, 2, 1)],
)
def test_center_dimensions(p, q, dim, even_dim):
    sig = Signature(p, q)
    report = center(sig)
    assert report.dimension == dim
    assert report.basis[0] == scalar(sig, 1)
    if dim == 2:
        assert report.basis[1] == orientation_operator(sig)
    if even_dim is not None:
        assert center(sig, even_only=True).dimension == even_dim


def test_center_of_even_subalgebra_of_scalars_is_undefined():
    with pytest.raises(SignatureError):
        center(Signature(0, 0), even_only=True)


def test_center_refuses_large_signatures():
    with pytest.raises(SignatureError, match="n <= 12"):
        center(Signature(13, 0))


def test_inverse_of_versor_and_general_element():
    sig = Signature(2, 1)
    v = vector(sig, [1, 2, 1])
    assert v * inverse(v) == scalar(sig, 1)
    a = scalar(sig, 3) + generator(sig, 0) + blade(sig, [1, 2])
    a_inv = inverse(a)
    assert a_inv.is_exact
    assert a * a_inv == scalar(sig, 1)
    assert a_inv * a == scalar(sig, 1)


def test_zero_divisor_has_no_inverse():
    sig = Signature(1, 0)
    idempotent = (scalar(sig, 1) + generator(sig, 0)) * Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        inverse(idempotent)


def test_multiplication_matrix_matches_product():
    sig = Signature(1, 2)
    a = scalar(sig, 2) + blade(sig, [0, 2])
    b = vector(sig, [1, -1, 3])
    left = multiplication_matrix(a, "left")
    right = multiplication_matrix(a, "right")
    assert (left @ b.to_array() == (a * b).to_array()).all()
    assert (right @ b.to_array() == (b * a).to_array()).all()


def test_json_round_trip_keeps_exact_values():
    sig = Signature(2, 1)
    a = scalar(sig, Fraction(1, 3)) + blade(sig, [0, 2]) * GaussianRational(2, -5)
    assert Multivector.from_json(a.to_json()) == a
    payload = Multivector.from_json(generator(sig, 1).to_json())
    assert payload == generator(sig, 1)


def test_float_coefficients_serialise_as_floats():
    sig = Signature(1, 0)
    a = generator(sig, 0) * 0.25
    assert '"re": "0.25"' in a.to_json()
    assert '"im"' not in a.to_json()


def test_grade_and_scalar_parts():
    sig = Signature(3, 0)
    a = scalar(sig, Fraction(2, 5)) + vector(sig, [1, 0, 3]) + blade(sig, [0, 2]) * 4
    assert a.grade_part(1) == vector(sig, [1, 0, 3])
    assert a.grade_part(2) == blade(sig, [0, 2]) * 4
    assert a.grade_part(3).is_zero()
    assert a.scalar_part() == Fraction(2, 5)


PROPERTY_SIGNATURES = [
    Signature(1, 0),
    Signature(0, 3),
    Signature(2, 2),
    Signature(3, 1),
    Signature(1, 4),
    Signature(4, 3),
    Signature(4, 4),
    Signature(0, 8),
]


def random_element(sig, rng, terms=6, parity=None, complex_coefficients=False):
    masks = [m for m in range(sig.dimension) if parity is None or grade(m) % 2 == parity]
    chosen = rng.choice(len(masks), size=min(terms, len(masks)), replace=False)
    out = {}
    for index in chosen:
        re = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        if complex_coefficients:
            out[masks[int(index)]] = GaussianRational(re, int(rng.integers(-3, 4)))
        else:
            out[masks[int(index)]] = re
    return Multivector(sig, out)


@pytest.mark.parametrize("sig", PROPERTY_SIGNATURES, ids=str)
def test_product_is_associative_on_random_triples(sig):
    rng = np.random.default_rng(sig.p * 31 + sig.q)
    for _ in range(5):
        a, b, c = (random_element(sig, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("sig", PROPERTY_SIGNATURES, ids=str)
def test_bar_reverses_random_products(sig):
    rng = np.random.default_rng(100 + sig.p * 31 + sig.q)
    for _ in range(5):
        a = random_element(sig, rng, complex_coefficients=True)
        b = random_element(sig, rng, complex_coefficients=True)
        assert bar(a * b) == bar(b) * bar(a)
        assert bar(bar(a)) == a


@pytest.mark.parametrize("sig", PROPERTY_SIGNATURES, ids=str)
def test_even_elements_form_a_subalgebra(sig):
    rng = np.random.default_rng(200 + sig.p * 31 + sig.q)
    for _ in range(5):
        a = random_element(sig, rng, parity=0)
        b = random_element(sig, rng, parity=0)
        assert (a * b).odd_part().is_zero()
        assert even_part(a * b) == a * b


@pytest.mark.parametrize("sig", PROPERTY_SIGNATURES, ids=str)
def test_orientation_commutes_with_even_elements(sig):
    rng = np.random.default_rng(300 + sig.p * 31 + sig.q)
    eps = orientation_operator(sig)
    for _ in range(5):
        a = random_element(sig, rng, parity=0)
        assert eps * a == a * eps
        b = random_element(sig, rng)
        if sig.n % 2:
            assert eps * b == b * eps
    if sig.n % 2 == 0:
        for mu in range(sig.n):
            g = generator(sig, mu)
            assert eps * g == -(g * eps)


ODD_SIGNATURES = [Signature(1, 0), Signature(0, 3), Signature(1, 4), Signature(4, 3), Signature(2, 5), Signature(7, 0)]


@pytest.mark.parametrize("sig", ODD_SIGNATURES, ids=str)
def test_odd_algebra_splits_as_even_plus_even_times_orientation(sig):
    eps_mask = sig.dimension - 1
    even_masks = [m for m in range(sig.dimension) if grade(m) % 2 == 0]
    odd_masks = {m for m in range(sig.dimension) if grade(m) % 2}
    images = [blade_product(sig, m, eps_mask)[1] for m in even_masks]
    assert set(images) == odd_masks
    assert len(images) == len(odd_masks)

    rng = np.random.default_rng(400 + sig.p * 31 + sig.q)
    eps = orientation_operator(sig)
    a = random_element(sig, rng, terms=10)
    e0 = a.even_part()
    e1 = a.odd_part() * inverse(eps)
    assert e1.odd_part().is_zero()
    assert e0 + e1 * eps == a


@pytest.mark.parametrize(
    "sig", [Signature(1, 0), Signature(0, 3), Signature(1, 4), Signature(4, 3), Signature(5, 0)], ids=str
)
def test_odd_orientation_projectors_are_central_idempotents(sig):
    assert sig.n % 2 == 1
    left, right = orientation_projectors(sig)
    assert left * left == left
    assert right * right == right
    assert (left * right).is_zero()
    assert left + right == scalar(sig, 1)
    rng = np.random.default_rng(500 + sig.p * 31 + sig.q)
    for _ in range(5):
        a = random_element(sig, rng)
        assert left * a == a * left
        assert right * a == a * right


def test_exact_inverse_of_a_dense_element():
    sig = Signature(3, 3)
    rng = np.random.default_rng(7)
    # each blade acts as a signed permutation, so 100 dominates the 12 terms
    a = random_element(sig, rng, terms=12) + scalar(sig, 100)
    a_inv = inverse(a)
    assert a_inv.is_exact
    assert a * a_inv == scalar(sig, 1)


def test_exact_inverse_with_gaussian_coefficients():
    sig = Signature(2, 1)
    a = scalar(sig, GaussianRational(2, 1)) + generator(sig, 0) + blade(sig, [1, 2]) * I
    a_inv = inverse(a)
    assert a_inv.is_exact
    assert a * a_inv == scalar(sig, 1)
    assert a_inv * a == scalar(sig, 1)
