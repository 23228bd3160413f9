use num_bigint::BigInt;

use crate::qseries::{pochhammer_inf, pochhammer_inf_step, theta_alternating_squares, Monomial, QSeries};
use crate::{IntMonomial, Series};

use super::report::ReportBuilder;
use super::VerdictReport;

fn compare(b: &mut ReportBuilder, label: &str, lhs: &Series, rhs: &Series) {
    for (n, (l, r)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        if l != r {
            b.fail(n, format!("{label}: {l}"), r);
        }
    }
}

/// `(-q;q)_∞ (q;q^2)_∞ = 1` and `(-q;q)_∞ = 1/(q;q^2)_∞` up to `q^order`.
pub fn check_euler(order: usize) -> VerdictReport {
    let mut b = ReportBuilder::new("euler", 0, order);
    let distinct: Series = pochhammer_inf(&Monomial::int(-1, 1), order);
    let odd: Series = pochhammer_inf_step(&Monomial::int(1, 1), 2, order).expect("step 2");
    compare(&mut b, "product", &Series::one(order), &(&distinct * &odd));
    let inv = odd.invert().expect("constant term 1");
    compare(&mut b, "quotient", &distinct, &inv);
    b.finish()
}

/// `∑ (-1)^n q^{n²} = (q;q^2)_∞^2 (q^2;q^2)_∞` up to `q^order`.
pub fn check_jtpi(order: usize) -> VerdictReport {
    let mut b = ReportBuilder::new("jtpi", 0, order);
    let theta: Series = theta_alternating_squares(order);
    let odd: Series = pochhammer_inf_step(&Monomial::int(1, 1), 2, order).expect("step 2");
    let even: Series = pochhammer_inf_step(&Monomial::int(1, 2), 2, order).expect("step 2");
    compare(&mut b, "theta", &theta, &(&(&odd * &odd) * &even));
    b.finish()
}

/// `∑_{n=0}^{order} (a;q)_n z^n/(q;q)_n` for a monomial `z` of positive degree.
fn q_binomial_sum(a: &IntMonomial, z: &IntMonomial, order: usize) -> Series {
    assert!(z.exponent >= 1);
    let mut sum = Series::one(order);
    let mut term = Series::one(order);
    let one = BigInt::from(1);
    for n in 1..=order {
        if z.exponent * n > order {
            break;
        }
        term.mul_binomial(&a.coeff, a.exponent + n - 1);
        term = term.scale(&z.coeff).shift(z.exponent);
        term.div_binomial(&one, n);
        sum = sum + &term;
    }
    sum
}

/// The q-binomial theorem `∑ (a;q)_n z^n/(q;q)_n = (az;q)_∞/(z;q)_∞` for
/// `a ∈ {0, ±q, ±2q, -q²}` and `z ∈ {q, q², 2q}`, up to `q^order`.
pub fn check_q_binomial(order: usize) -> VerdictReport {
    let mut b = ReportBuilder::new("q-binomial", 0, order);
    let avals = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (-1, 2)];
    let zvals = [(1, 1), (1, 2), (2, 1)];
    for &(ac, ae) in &avals {
        for &(zc, ze) in &zvals {
            let a = IntMonomial::int(ac, ae);
            let z = IntMonomial::int(zc, ze);
            let lhs = q_binomial_sum(&a, &z, order);
            let num: Series = pochhammer_inf(&a.times(&z), order);
            let den: QSeries<BigInt> = pochhammer_inf(&z, order);
            let rhs = num * den.invert().expect("z has positive degree");
            compare(&mut b, &format!("a={ac}q^{ae} z={zc}q^{ze}"), &lhs, &rhs);
        }
    }
    b.finish()
}

/// Euler, Jacobi triple product at `z = -1`, and q-binomial instances, all
/// to the same order.
pub fn check_preliminaries(order: usize) -> VerdictReport {
    VerdictReport::merge(
        "preliminaries",
        vec![check_euler(order), check_jtpi(order), check_q_binomial(order)],
    )
}
