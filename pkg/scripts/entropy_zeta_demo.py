#!/usr/bin/env python3
"""Walk through the two showcase systems end to end.

Run from the repository root after an editable install:

    python3 scripts/entropy_zeta_demo.py
"""

from ffzeta import (
    Poly,
    classify,
    companion,
    entropy,
    make_field,
    nk_table,
    polyring,
    series_from_closed_form,
    series_from_nk,
    system_data,
)


def show(title, field, A, terms=8):
    print(f"== {title} ==")
    sd = system_data(field, A)
    ent = entropy(field, A)
    print(f"entropy: {ent.E} * log({ent.q}) = {ent.value:.6f}")
    print(f"roots of unity: {sd.rou_orders}  unit orders: {sd.unit_orders}  weights: {sd.weights}")
    nks = nk_table(field, A, terms)
    print("N_k:", [v.as_int(field.q) for v in nks])
    z = classify(sd)
    if z.algebraic:
        print("zeta (algebraic):", z.closed_form.display())
        series = series_from_closed_form(z.closed_form, terms)
    else:
        cert = z.certificate
        print(f"zeta transcendental: unit order {cert.bad_unit_order} "
              f"escapes root-of-unity orders {list(cert.rou_orders)}")
        series = series_from_nk(field.q, nks, terms)
    print("series:", [str(c) for c in series.coeffs])
    print()


def main():
    F7 = make_field(7)
    c = lambda v: Poly.const(F7, v)
    z7 = Poly(F7)
    show("diagonal (6, 2) over GF(7)", F7, [[c(6), z7], [z7, c(2)]])

    F2 = make_field(2)
    ring = polyring(F2)
    t = Poly.x(F2)
    one = Poly.const(F2, 1)
    P = Poly(ring, [t, t * t, t * t, one])
    show("companion of X^3 + t^2 X^2 + t^2 X + t over GF(2)", F2, companion(ring, P))


if __name__ == "__main__":
    main()
