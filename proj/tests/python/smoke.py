"""Smoke test for the python extension: one probe per exposed surface."""

import math
import sys

import fsdist


def close(a, b, rel):
    return abs(a - b) <= rel * max(abs(a), abs(b))


def main():
    # the three density routes agree at t = 1
    bc = fsdist.density_branch_cut(1.0)
    sr = fsdist.density_series(1.0)
    bw = fsdist.density_bromwich(1.0, c=1.5, height=4000.0)
    assert close(bc.value, 0.322720345424118108, 1e-11), bc.value
    assert close(sr.value, bc.value, 1e-9), (sr.value, bc.value)
    assert abs(bw.value - bc.value) < 1e-3, (bw.value, bc.value)
    assert bc.method == fsdist.Method.branch_cut

    # tail routes agree where both converge
    q = fsdist.tail_quadrature(1.5, 2.0)
    c = fsdist.tail_closed_form(1.5, 2.0)
    a = fsdist.tail_asymptotic(1.5, 30.0)
    assert close(q.normalized, c.normalized, 1e-9), (q.normalized, c.normalized)
    assert a.bare > 0.0
    assert q.method == fsdist.Method.quadrature

    # the closed form refuses the cancellation region with the typed error
    try:
        fsdist.tail_closed_form(1.5, 100.0)
    except fsdist.ConvergenceError:
        pass
    else:
        raise AssertionError("expected ConvergenceError past tail_y_cancel")
    assert fsdist.tail_y_cancel == 20.0

    # domain violations surface as ValueError (std::domain_error)
    try:
        fsdist.density_series(-1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for t <= 0")

    # inequalities hold and sweeps are deterministic
    r = fsdist.margin(fsdist.Inequality.a2, 0.5, 3.0)
    assert r.holds and r.margin > 0.0
    s1 = fsdist.sweep(fsdist.Inequality.jones, -0.5, 10.0, 0.0, 100.0, 200, 7)
    s2 = fsdist.sweep(fsdist.Inequality.jones, -0.5, 10.0, 0.0, 100.0, 200, 7)
    assert len(s1) == 200
    assert all(p.holds for p in s1)
    assert [p.margin for p in s1] == [p.margin for p in s2]

    fp = fsdist.f_properties(1.0, 2.0, 1e-5)
    assert fp.f_decreasing_margin > 0.0 and fp.fd_mismatch < 1e-6

    # special functions against known values
    assert close(fsdist.bessel_i(0.0, 1.0).value, 1.26606587775200834, 1e-12)
    assert close(fsdist.gamma(0.5), math.sqrt(math.pi), 1e-13)
    assert close(fsdist.digamma(1.0), -0.57721566490153286, 1e-12)
    assert close(fsdist.exp_integral_e1(1.0), 0.219383934395520274, 1e-11)
    assert close(fsdist.hyp_pfq([1.0, 1.0], [2.0], 0.5).value,
                 2.0 * math.log(2.0), 1e-12)
    assert close(
        fsdist.bessel_operator_d(1, -1.0, 1.0, 2.0),
        2.0**-2.0 * fsdist.bessel_i(2.0, 2.0).value, 1e-12)

    # a verification suite runs and serializes
    rep = fsdist.run_suite("specfun")
    assert rep.all_passed(), f"{rep.failed()} specfun checks failed"
    text = fsdist.report_to_csv(rep)
    assert text.startswith(
        "suite,id,inputs,route_a,route_b,value_a,value_b,discrepancy,tolerance,pass\n")
    assert len(text.splitlines()) == len(rep.records) + 1

    print(f"python smoke: ok ({len(rep.records)} suite records checked)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
