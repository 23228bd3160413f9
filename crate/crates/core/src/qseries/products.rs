use crate::error::{Error, Result};

use super::{from_i64, Coeff, Monomial, QSeries};

/// `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})` truncated at `q^order`.
pub fn pochhammer_fin<T: Coeff>(a: &Monomial<T>, n: usize, order: usize) -> QSeries<T> {
    pochhammer_fin_step(a, 1, n, order)
}

/// `(1-a)(1-aq^step)...(1-aq^{step(n-1)})` truncated at `q^order`.
///
/// `step = 0` repeats the factor `1-a` exactly `n` times.
pub fn pochhammer_fin_step<T: Coeff>(a: &Monomial<T>, step: usize, n: usize, order: usize) -> QSeries<T> {
    let mut out = QSeries::one(order);
    if a.is_zero() {
        return out;
    }
    for i in 0..n {
        let d = a.exponent + step * i;
        if d > order {
            break;
        }
        out.mul_binomial(&a.coeff, d);
    }
    out
}

/// `(a;q)_∞` modulo `q^{order+1}`.
///
/// Only factors of degree at most `order` are multiplied in; the rest are
/// `1 + O(q^{order+1})`. With `a.exponent == 0` the leading factor is the
/// scalar `1 - c`.
pub fn pochhammer_inf<T: Coeff>(a: &Monomial<T>, order: usize) -> QSeries<T> {
    pochhammer_inf_step(a, 1, order).expect("unit step is always valid")
}

/// `∏_{i≥0} (1 - a q^{step·i})` modulo `q^{order+1}`, e.g. `(q;q^2)_∞` is
/// `pochhammer_inf_step(&Monomial::int(1, 1), 2, order)`.
pub fn pochhammer_inf_step<T: Coeff>(a: &Monomial<T>, step: usize, order: usize) -> Result<QSeries<T>> {
    if step == 0 {
        return Err(Error::param("step", 0, "infinite product needs step >= 1"));
    }
    let n = if a.exponent > order {
        0
    } else {
        (order - a.exponent) / step + 1
    };
    Ok(pochhammer_fin_step(a, step, n, order))
}

/// `q^k/(1-q^k) = q^k + q^{2k} + ...` truncated at `q^order`.
pub fn geometric_tail<T: Coeff>(k: usize, order: usize) -> Result<QSeries<T>> {
    if k == 0 {
        return Err(Error::param("k", k, "must be at least 1"));
    }
    Ok(QSeries::from_coeffs(
        order,
        (0..=order).map(|n| if n >= k && n % k == 0 { T::one() } else { T::zero() }),
    ))
}

/// `∑_{n∈ℤ} (-1)^n q^{n²} = 1 + 2∑_{n≥1} (-1)^n q^{n²}` truncated at `q^order`.
pub fn theta_alternating_squares<T: Coeff>(order: usize) -> QSeries<T> {
    let mut coeffs = vec![T::zero(); order + 1];
    coeffs[0] = T::one();
    let mut n = 1usize;
    while n * n <= order {
        coeffs[n * n] = from_i64(if n.is_multiple_of(2) { 2 } else { -2 });
        n += 1;
    }
    QSeries::from_coeffs(order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = QSeries<BigInt>;
    type M = Monomial<BigInt>;

    // Expands a product of sparse polynomials term by term, independent of the
    // in-place binomial updates used by the constructors.
    fn expand(factors: &[Vec<(i64, usize)>], order: usize) -> Vec<i64> {
        let mut acc = vec![0i64; order + 1];
        acc[0] = 1;
        for f in factors {
            let mut next = vec![0i64; order + 1];
            for (d, a) in acc.iter().enumerate() {
                for &(c, e) in f {
                    if d + e <= order {
                        next[d + e] += a * c;
                    }
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn finite_products() {
        assert_eq!(pochhammer_fin(&M::int(1, 1), 2, 3), S::from_i64s(3, &[1, -1, -1, 1]));
        assert_eq!(pochhammer_fin(&M::int(-1, 1), 1, 2), S::from_i64s(2, &[1, 1]));
        assert_eq!(pochhammer_fin(&M::int(5, 1), 0, 4), S::one(4));
        let want = expand(&[vec![(1, 0), (2, 1)], vec![(1, 0), (2, 2)], vec![(1, 0), (2, 3)]], 6);
        assert_eq!(pochhammer_fin(&M::int(-2, 1), 3, 6), S::from_i64s(6, &want));
    }

    #[test]
    fn infinite_products() {
        assert_eq!(pochhammer_inf(&M::int(-1, 1), 5), S::from_i64s(5, &[1, 1, 1, 2, 2, 3]));
        let factors: Vec<_> = (1..=7).map(|i| vec![(1, 0), (-1, i)]).collect();
        let want = expand(&factors, 7);
        assert_eq!(want, vec![1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(pochhammer_inf(&M::int(1, 1), 7), S::from_i64s(7, &want));
        assert_eq!(pochhammer_inf(&M::int(0, 1), 9), S::one(9));
    }

    #[test]
    fn constant_prefactor() {
        // (3;q)_2 = (1-3)(1-3q)
        assert_eq!(pochhammer_fin(&M::int(3, 0), 2, 2), S::from_i64s(2, &[-2, 6]));
    }

    #[test]
    fn step_two_products() {
        let odd = pochhammer_inf_step(&M::int(1, 1), 2, 9).unwrap();
        let factors: Vec<_> = [1, 3, 5, 7, 9].iter().map(|&i| vec![(1, 0), (-1, i)]).collect();
        assert_eq!(odd, S::from_i64s(9, &expand(&factors, 9)));
        assert!(pochhammer_inf_step(&M::int(1, 1), 0, 9).is_err());
    }

    #[test]
    fn tails() {
        assert_eq!(
            geometric_tail::<BigInt>(2, 7).unwrap(),
            S::from_i64s(7, &[0, 0, 1, 0, 1, 0, 1])
        );
        assert_eq!(geometric_tail::<BigInt>(1, 3).unwrap(), S::from_i64s(3, &[0, 1, 1, 1]));
        assert_eq!(
            geometric_tail::<BigInt>(5, 5).unwrap(),
            S::monomial(BigInt::from(1), 5, 5)
        );
        assert!(geometric_tail::<BigInt>(0, 5).is_err());
    }

    #[test]
    fn theta() {
        assert_eq!(
            theta_alternating_squares::<BigInt>(10),
            S::from_i64s(10, &[1, -2, 0, 0, 2, 0, 0, 0, 0, -2])
        );
        assert_eq!(theta_alternating_squares::<BigInt>(0), S::one(0));
    }

    #[test]
    fn pochhammer_times_inverse() {
        let e = pochhammer_inf(&M::int(1, 1), 50);
        assert_eq!(&e * &e.invert().unwrap(), S::one(50));
        let p = e.invert().unwrap().with_order(10);
        assert_eq!(p.coeff(5), &BigInt::from(7));
    }
}
