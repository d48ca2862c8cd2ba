use crate::error::{Error, Result};
use crate::exactnum::{distinct_radicands, Biquad, FieldOps, QExt};

pub(crate) type V3<F> = [F; 3];

pub(crate) fn cross<F: FieldOps>(a: &V3<F>, b: &V3<F>) -> V3<F> {
    [
        a[1].fmul(&b[2]).fsub(&a[2].fmul(&b[1])),
        a[2].fmul(&b[0]).fsub(&a[0].fmul(&b[2])),
        a[0].fmul(&b[1]).fsub(&a[1].fmul(&b[0])),
    ]
}

pub(crate) fn dot<F: FieldOps>(a: &V3<F>, b: &V3<F>) -> F {
    a[0].fmul(&b[0])
        .fadd(&a[1].fmul(&b[1]))
        .fadd(&a[2].fmul(&b[2]))
}

/// Vectors brought into one field: a single quadratic field, or the
/// compositum of two.
pub(crate) enum Lifted {
    Single(Vec<V3<QExt>>),
    Double(Vec<V3<Biquad>>),
}

pub(crate) fn lift(vs: &[&V3<QExt>]) -> Result<Lifted> {
    let fields = distinct_radicands(vs.iter().flat_map(|v| v.iter()));
    match fields.len() {
        0 | 1 => Ok(Lifted::Single(vs.iter().map(|v| (*v).clone()).collect())),
        _ => {
            // a third field is fine when it is the compositum's own ℚ(√(d1·d2))
            let (d1, d2) = (&fields[0], &fields[1]);
            let mut out = Vec::with_capacity(vs.len());
            for v in vs {
                let mut w = Vec::with_capacity(3);
                for c in v.iter() {
                    w.push(Biquad::embed(c, d1, d2).ok_or_else(|| mixed(d1, d2))?);
                }
                out.push([w[0].clone(), w[1].clone(), w[2].clone()]);
            }
            Ok(Lifted::Double(out))
        }
    }
}

fn mixed(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> Error {
    Error::MixedRadicands(a.to_string(), b.to_string())
}

/// Scalars brought into one field, in the order given.
pub(crate) enum LiftedFlat {
    Single(Vec<QExt>),
    Double(Vec<Biquad>),
}

pub(crate) fn lift_flat(vals: &[QExt]) -> Result<LiftedFlat> {
    let pad = |c: &[QExt], i: usize| c.get(i).cloned().unwrap_or_else(QExt::zero);
    let chunks: Vec<V3<QExt>> = vals
        .chunks(3)
        .map(|c| [pad(c, 0), pad(c, 1), pad(c, 2)])
        .collect();
    let refs: Vec<&V3<QExt>> = chunks.iter().collect();
    let n = vals.len();
    Ok(match lift(&refs)? {
        Lifted::Single(v) => LiftedFlat::Single(v.into_iter().flatten().take(n).collect()),
        Lifted::Double(v) => LiftedFlat::Double(v.into_iter().flatten().take(n).collect()),
    })
}

/// Runs a generic body over scalars lifted into a common field.
macro_rules! lifted {
    ($vals:expr, |$v:ident| $body:expr) => {
        match $crate::projective::lift_flat($vals)? {
            $crate::projective::LiftedFlat::Single($v) => $body,
            $crate::projective::LiftedFlat::Double($v) => $body,
        }
    };
}
pub(crate) use lifted;

pub(crate) fn v3<F: Clone>(v: &[F], i: usize) -> V3<F> {
    [v[i].clone(), v[i + 1].clone(), v[i + 2].clone()]
}

/// Scales by the inverse of the first nonzero entry and projects each entry
/// back to a single quadratic field.
pub(crate) fn lower_normalized<F: FieldOps>(v: &[F]) -> Result<Vec<QExt>> {
    let lead = v
        .iter()
        .find(|c| !c.fzero())
        .ok_or(Error::ZeroVector)?
        .finv();
    v.iter()
        .map(|c| {
            c.fmul(&lead)
                .lower()
                .ok_or_else(|| Error::MixedRadicands("compositum".into(), "quadratic field".into()))
        })
        .collect()
}
