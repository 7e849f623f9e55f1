//! The `eval` vocabulary: function names, arities and dispatch.

use summa_core::special_functions::{
    bernoulli_poly, cosine_integral, digamma, hurwitz_zeta, hurwitz_zeta_deriv, log_barnes_g,
    log_gamma, polygamma, shifted_sine_integral, sine_integral, stieltjes_gamma, Approximation,
};
use summa_core::NumError;

/// (name, argument names, meaning)
pub const FUNCTIONS: [(&str, &str, &str); 12] = [
    ("Si", "x", "sine integral"),
    ("si", "x", "Si(x) - pi/2"),
    ("Ci", "x", "cosine integral, x > 0"),
    ("psi", "x", "digamma"),
    ("polygamma", "n x", "n-th derivative of digamma"),
    ("loggamma", "x", "log Gamma(x), x > 0"),
    ("logbarnesg", "z", "log G(z), z > 0"),
    ("hurwitz", "s a", "zeta(s, a)"),
    ("hurwitzd1", "s a", "d/ds zeta(s, a)"),
    ("hurwitzd2", "s a", "d^2/ds^2 zeta(s, a)"),
    (
        "stieltjes",
        "p a",
        "generalized Stieltjes constant gamma_p(a)",
    ),
    ("bernoullipoly", "n x", "Bernoulli polynomial B_n(x)"),
];

#[derive(Debug)]
pub enum EvalError {
    Usage(String),
    Numeric(NumError),
}

impl std::error::Error for EvalError {}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalError::Usage(m) => f.write_str(m),
            EvalError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

pub fn help_text() -> String {
    let mut s = String::from("functions:\n");
    for (name, args, what) in FUNCTIONS {
        s += &format!("  {:<14} {:<5} {what}\n", name, args);
    }
    s
}

fn index(v: f64, what: &str) -> Result<usize, EvalError> {
    if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(EvalError::Usage(format!(
            "{what} must be a non-negative integer, got {v}"
        )))
    }
}

pub fn evaluate(name: &str, args: &[f64]) -> Result<Approximation, EvalError> {
    let (_, arg_names, _) = FUNCTIONS
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| EvalError::Usage(format!("unknown function '{name}'\n{}", help_text())))?;
    let arity = arg_names.split_whitespace().count();
    if args.len() != arity {
        return Err(EvalError::Usage(format!(
            "{name} takes {arity} argument(s) ({arg_names}), got {}",
            args.len()
        )));
    }
    let r = match name {
        "Si" => sine_integral(args[0]),
        "si" => shifted_sine_integral(args[0]),
        "Ci" => cosine_integral(args[0]),
        "psi" => digamma(args[0]),
        "polygamma" => polygamma(index(args[0], "n")? as u32, args[1]),
        "loggamma" => log_gamma(args[0]),
        "logbarnesg" => log_barnes_g(args[0]),
        "hurwitz" => hurwitz_zeta(args[0], args[1]),
        "hurwitzd1" => hurwitz_zeta_deriv(1, args[0], args[1]),
        "hurwitzd2" => hurwitz_zeta_deriv(2, args[0], args[1]),
        "stieltjes" => stieltjes_gamma(index(args[0], "p")? as u32, args[1]),
        "bernoullipoly" => bernoulli_poly(index(args[0], "n")?, args[1]).map(Approximation::exact),
        _ => unreachable!("name checked against the table"),
    };
    r.map_err(EvalError::Numeric)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_function_dispatches() {
        for (name, args, _) in FUNCTIONS {
            let n = args.split_whitespace().count();
            let v = vec![2.0; n];
            assert!(evaluate(name, &v).is_ok(), "{name}");
        }
    }

    #[test]
    fn wrong_arity_and_unknown_names_are_usage_errors() {
        assert!(matches!(
            evaluate("psi", &[1.0, 2.0]),
            Err(EvalError::Usage(_))
        ));
        assert!(matches!(
            evaluate("gamma", &[1.0]),
            Err(EvalError::Usage(_))
        ));
        assert!(matches!(
            evaluate("polygamma", &[1.5, 2.0]),
            Err(EvalError::Usage(_))
        ));
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn ci_at_pi() {
        let v = evaluate("Ci", &[3.14159265]).unwrap().value;
        assert!((v - 0.0736679131890922).abs() < 1e-13, "{v}");
    }
}
