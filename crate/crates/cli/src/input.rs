use std::fmt::Display;

use riordan_tp::exact::{self, Scalar};
use riordan_tp::{
    named_triangle, JacobiParams, RecursiveMatrixParams, RiordanSpec, SequenceSpec, Tail,
};

pub type Usage<T> = Result<T, String>;

pub fn usage(e: impl Display) -> String {
    e.to_string()
}

/// Parses `1,2,3/4` into exact values.
pub fn scalar_list(flag: &str, text: &str) -> Usage<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Err(format!("--{flag} is empty"));
    }
    text.split(',')
        .map(|item| exact::parse_scalar(item.trim()).map_err(|e| format!("--{flag}: {e}")))
        .collect()
}

/// Where a triangle (and possibly Jacobi parameters) come from.
#[derive(Default)]
pub struct Resolved {
    pub spec: Option<RiordanSpec>,
    pub recursive: Option<RecursiveMatrixParams>,
    pub jacobi: Option<JacobiParams>,
    pub parameters: Vec<(String, String)>,
}

pub struct SourceFlags<'a> {
    pub name: Option<&'a str>,
    pub z: Option<&'a str>,
    pub a: Option<&'a str>,
    pub tail: Tail,
    pub params: Option<&'a str>,
}

pub fn recursive_params(text: &str) -> Usage<RecursiveMatrixParams> {
    match scalar_list("params", text)?.as_slice() {
        [a, b, s, t] => {
            RecursiveMatrixParams::new(a.clone(), b.clone(), s.clone(), t.clone()).map_err(usage)
        }
        other => Err(format!(
            "--params expects a,b,s,t (got {} values)",
            other.len()
        )),
    }
}

pub fn resolve(flags: &SourceFlags<'_>) -> Usage<Resolved> {
    let mut out = Resolved::default();
    if let Some(name) = flags.name {
        let spec = named_triangle(name).map_err(usage)?;
        out.parameters
            .push(("name".into(), name.to_ascii_lowercase()));
        out.parameters.push(("spec".into(), spec.to_string()));
        out.spec = Some(spec);
    } else if let (Some(z), Some(a)) = (flags.z, flags.a) {
        let z = SequenceSpec::new(scalar_list("z", z)?, flags.tail).map_err(usage)?;
        let a = SequenceSpec::new(scalar_list("a", a)?, flags.tail).map_err(usage)?;
        let spec = RiordanSpec::new(a, z).map_err(usage)?;
        out.parameters.push(("spec".into(), spec.to_string()));
        out.spec = Some(spec);
    } else if let Some(text) = flags.params {
        let values = scalar_list("params", text)?;
        match values.as_slice() {
            [_, _, _, _] => {
                let p = recursive_params(text)?;
                out.parameters.push(("params".into(), p.to_string()));
                out.spec = Some(p.to_spec());
                out.recursive = Some(p);
            }
            [a, b, r, s, t] => {
                let j = JacobiParams::new(a.clone(), b.clone(), r.clone(), s.clone(), t.clone())
                    .map_err(usage)?;
                out.parameters.push(("params".into(), j.to_string()));
                if j.r != exact::int(0) {
                    let a_seq =
                        SequenceSpec::new(vec![r.clone(), s.clone(), t.clone()], Tail::Zero)
                            .map_err(usage)?;
                    let z_seq =
                        SequenceSpec::new(vec![a.clone(), b.clone()], Tail::Zero).map_err(usage)?;
                    out.spec = Some(RiordanSpec::new(a_seq, z_seq).map_err(usage)?);
                }
                out.jacobi = Some(j);
            }
            other => {
                return Err(format!(
                    "--params expects a,b,s,t or a,b,r,s,t (got {} values)",
                    other.len()
                ))
            }
        }
    }
    Ok(out)
}
