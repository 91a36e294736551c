//! Double-double reference summation for Wright functions with integer
//! parameters, where every term is a rational multiple of `z^k`.

#![allow(dead_code)]

#[derive(Debug, Clone, Copy)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl DD {
    pub fn from(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    pub fn add(self, o: DD) -> DD {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DD { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> DD {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        DD { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> DD {
        let q1 = self.hi / b;
        let r = self.add(DD::from(q1).mul_f64(-b));
        let q2 = r.hi / b;
        let r = r.add(DD::from(q2).mul_f64(-b));
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo }.add(DD::from(q3))
    }

    pub fn abs(self) -> f64 {
        self.hi.abs()
    }
}

/// `W_{alpha,beta}(z)` for integer `alpha >= 1`, `beta >= 1` and `z` exactly
/// representable, to roughly 30 digits before the final rounding.
pub fn wright_dd(alpha: u32, beta: u32, z: f64) -> f64 {
    assert!(alpha >= 1 && beta >= 1);
    let mut t = DD::from(1.0);
    for j in 1..beta {
        t = t.div_f64(j as f64);
    }
    let mut sum = t;
    for k in 1..2000u32 {
        t = t.mul_f64(z).div_f64(k as f64);
        let top = alpha * k + beta - 1;
        for j in 0..alpha {
            t = t.div_f64((top - j) as f64);
        }
        sum = sum.add(t);
        if t.abs() < 1e-40 * sum.abs().max(1e-300) && k > 10 {
            break;
        }
    }
    sum.hi + sum.lo
}
