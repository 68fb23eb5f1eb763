use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(s) => f.write_str(s),
            Expr::Neg(x) => {
                f.write_str("-")?;
                x.write(f, 3)
            }
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                l.write(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                r.write(f, 2)
            }
            Expr::Mul(l, r) => {
                l.write(f, 2)?;
                f.write_str("*")?;
                r.write(f, 3)
            }
            Expr::Pow(b, k) => {
                b.write(f, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    DegRevLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    Reduced,
    Domain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    ZMod(u64),
    Quotient { field: FieldSpec, vars: Vec<String>, relations: Vec<Expr>, order: Option<OrderSpec>, assume: Vec<Flag> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryKind {
    IsReduced,
    IsDomain,
    Fiber,
    MinimalPrimes,
    Localization,
    Recognize,
}

impl QueryKind {
    pub fn keyword(self) -> &'static str {
        match self {
            QueryKind::IsReduced => "is_reduced",
            QueryKind::IsDomain => "is_domain",
            QueryKind::Fiber => "fiber",
            QueryKind::MinimalPrimes => "minimal_primes",
            QueryKind::Localization => "localization",
            QueryKind::Recognize => "recognize",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        [Self::IsReduced, Self::IsDomain, Self::Fiber, Self::MinimalPrimes, Self::Localization, Self::Recognize]
            .into_iter()
            .find(|k| k.keyword() == s)
    }
}

/// Roots modulo the queried prime; `gamma` defaults to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootArgs {
    pub alpha: Expr,
    pub beta: Expr,
    pub gamma: Option<Expr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSpec {
    All,
    Sample(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigKey {
    Cap,
    Seed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    DefineRing { name: String, spec: RingSpec },
    DefineIdeal { name: String, ring: String, gens: Vec<Expr> },
    DefineRab { name: String, ring: String, ideal: String, a: Expr, b: Expr },
    AttachRoots { target: String, alpha: Expr, beta: Expr },
    Query { kind: QueryKind, target: String, prime: Option<Vec<Expr>>, roots: Option<RootArgs> },
    OracleCheck { target: String },
    Search { n_min: u64, n_max: u64, pairs: PairSpec },
    SetConfig { key: ConfigKey, value: u64 },
}

struct List<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for List<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::DefineRing { name, spec: RingSpec::ZMod(n) } => write!(f, "ring {name} = zmod({n});"),
            Command::DefineRing { name, spec: RingSpec::Quotient { field, vars, relations, order, assume } } => {
                let field = match field {
                    FieldSpec::Prime(p) => format!("GF({p})"),
                    FieldSpec::Rationals => "QQ".into(),
                };
                write!(f, "ring {name} = quotient({field}, vars={}, mod={}", List(vars), List(relations))?;
                if let Some(o) = order {
                    write!(f, ", order={}", if *o == OrderSpec::Lex { "lex" } else { "degrevlex" })?;
                }
                if !assume.is_empty() {
                    let names: Vec<&str> =
                        assume.iter().map(|a| if *a == Flag::Reduced { "reduced" } else { "domain" }).collect();
                    write!(f, ", assume={}", List(&names))?;
                }
                f.write_str(");")
            }
            Command::DefineIdeal { name, ring, gens } => write!(f, "ideal {name} = span({ring}, {});", List(gens)),
            Command::DefineRab { name, ring, ideal, a, b } => write!(f, "rab {name} = rab({ring}, {ideal}, a={a}, b={b});"),
            Command::AttachRoots { target, alpha, beta } => write!(f, "roots {target} with alpha={alpha}, beta={beta};"),
            Command::Query { kind, target, prime, roots } => {
                write!(f, "query {} {target}", kind.keyword())?;
                if let Some(p) = prime {
                    write!(f, " over prime={}", List(p))?;
                }
                if let Some(r) = roots {
                    write!(f, " with alpha={}, beta={}", r.alpha, r.beta)?;
                    if let Some(g) = &r.gamma {
                        write!(f, ", gamma={g}")?;
                    }
                }
                f.write_str(";")
            }
            Command::OracleCheck { target } => write!(f, "check oracle {target};"),
            Command::Search { n_min, n_max, pairs } => {
                write!(f, "search locq n={n_min}..{n_max}")?;
                match pairs {
                    PairSpec::All => f.write_str(", pairs=all;"),
                    PairSpec::Sample(k) => write!(f, ", pairs={k};"),
                }
            }
            Command::SetConfig { key, value } => {
                write!(f, "set {}={value};", if *key == ConfigKey::Cap { "cap" } else { "seed" })
            }
        }
    }
}
