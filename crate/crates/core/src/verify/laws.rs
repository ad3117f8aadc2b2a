//! Registry of every law the suites emit.
//!
//! Each law id names exactly one equation family. The table ships with the
//! docs (`docs/laws.md`); a coverage test asserts that both the registry
//! and the document contain every axiom of the deriving-transform, tangent
//! and Cartesian-differential definitions plus each supporting lemma, and
//! that the suites actually emit every registered id.

/// (law id, suite that emits it, one-line statement).
pub const LAWS: &[(&str, &str, &str)] = &[
    ("lnl.triangle-F", "lnl", "F(eta_X); d_{F X} = id_{F X}"),
    ("lnl.triangle-U", "lnl", "eta_{U A}; U(d_A) = id_{U A}"),
    ("lnl.m-iso-right", "lnl", "m_{X,Y}; m^-1_{X,Y} = id"),
    ("lnl.m-iso-left", "lnl", "m^-1_{X,Y}; m_{X,Y} = id"),
    ("lnl.m-unit-iso", "lnl", "m_I; m_I^-1 = id and m_I^-1; m_I = id"),
    ("lnl.nat-eta", "lnl", "f; eta_Y = eta_X; U(F(f))"),
    ("lnl.nat-counit", "lnl", "!(h); d_B = d_A; h"),
    ("lnl.nat-m", "lnl", "F(f) (x) F(g); m = m; F(f x g)"),
    ("lnl.nat-n", "lnl", "U(h) x U(k); n = n; U(h (x) k)"),
    ("lnl.comonoid-coassoc", "lnl", "c_X; c_X (x) id = c_X; id (x) c_X"),
    ("lnl.comonoid-counit-left", "lnl", "c_X; w_X (x) id = id"),
    ("lnl.comonoid-counit-right", "lnl", "c_X; id (x) w_X = id"),
    ("lnl.comonoid-cocomm", "lnl", "c_X; sym = c_X"),
    ("lnl.colax-is-m-inv", "lnl", "F(eta x eta); F(n); d = m^-1"),
    ("lnl.phi-roundtrip", "lnl", "lax-from-colax of colax-from-lax recovers n"),
    ("lnl.dagger-counit", "lnl", "(d_A)-dagger = id_{U A}"),
    ("lnl.dagger-roundtrip", "lnl", "F(f-dagger); d = f"),
    ("lnl.dagger-recover", "lnl", "(F(g); d)-dagger = g"),
    ("lnl.dagger-injective", "lnl", "dagger separates distinct catalog maps"),
    ("bang.comonad-right", "lnl", "p_A; d_{!A} = id_{!A}"),
    ("bang.comonad-left", "lnl", "p_A; !(d_A) = id_{!A}"),
    ("bang.comonad-coassoc", "lnl", "p_A; p_{!A} = p_A; !(p_A)"),
    ("bang.functor-id", "lnl", "!(id) = id"),
    ("bang.lax-counit", "lnl", "m_(x); d_{A (x) B} = d_A (x) d_B"),
    ("bang.lax-comult", "lnl", "m_(x); p = p (x) p; m_(x); !(m_(x))"),
    ("lnl.derived-c", "lnl", "contraction override = F(Delta); m^-1"),
    ("lnl.derived-w", "lnl", "weakening override = F(I_X); m_I^-1"),
    ("lnl.derived-seely", "lnl", "Seely override = c; !p_1 (x) !p_2"),
    ("addmon.tensor-sum", "lnl", "k (x) (f+g) = k (x) f + k (x) g"),
    ("addmon.tensor-zero", "lnl", "k (x) 0 = 0"),
    ("promotion.counit", "lnl", "F(f); d = f for co-Kleisli f"),
    ("promotion.comult", "lnl", "F(f); p = p; !(F(f))"),
    ("fib.split-id", "fib", "id^* is the identity reindexing"),
    ("fib.split-comp", "fib", "(u;v)^* = composite of reindexings, on the nose"),
    ("fib.ls-compose-oracle", "fib", "composition second component matches the pointwise oracle"),
    ("fib.ls-id-left", "fib", "id;(f,u) = (f,u)"),
    ("fib.ls-id-right", "fib", "(f,u);id = (f,u)"),
    ("fib.ls-assoc", "fib", "composition in LS is associative"),
    ("fib.lift-unique", "fib", "exactly one vertical factors through the chosen lift"),
    ("fib.lift-tensor", "fib", "tensor of chosen lifts is the chosen lift of the product"),
    ("fib.tensor-oracle", "fib", "fibre tensor matches the pointwise oracle"),
    ("fib.reindex-monoidal", "fib", "reindexing is strict monoidal on fibre tensors"),
    ("fib.with-reindex", "fib", "reindexing is strict cartesian on fibre products"),
    ("fib.tensor-unit", "fib", "v (x)_X id_{1^X} = v"),
    ("fib.tensor-id", "fib", "id (x)_X id = id"),
    ("fib.us-functor", "fib", "U^S preserves composition"),
    ("fib.fs-functor", "fib", "F^S preserves composition"),
    ("fib.us-id", "fib", "U^S(id) = id"),
    ("fib.fs-id", "fib", "F^S(id) = id"),
    ("fib.us-lemma-weak", "fib", "U^S(f, w (x) u) = (f, pi_2; U(u))"),
    ("fib.fs-lemma-pi", "fib", "m; F(pi_2; f) = w (x) F(f)"),
    ("fib.us-lift", "fib", "U^S preserves chosen lifts"),
    ("fib.fs-lift", "fib", "F^S preserves chosen lifts"),
    ("fib.us-lax-nat", "fib", "the fibrewise lax structure of U^S is natural"),
    ("fib.fs-lax-nat", "fib", "the fibrewise lax structure of F^S is natural"),
    ("fib.triangle-FS", "fib", "F^S(eta^S); d^S = id"),
    ("fib.triangle-US", "fib", "eta^S; U^S(d^S) = id"),
    ("fib.fibre-I-counit", "fib", "the fibre over I recovers the base counit"),
    ("fib.fibre-I-eta", "fib", "the fibre over I recovers the base unit"),
    ("fib.bangS-comonad-right", "fib", "p^S; d^S_{!} = id fibrewise"),
    ("fib.bangS-comonad-left", "fib", "p^S; !^S(d^S) = id fibrewise"),
    ("fib.bangS-id", "fib", "!^S(id) = id"),
    ("fib.cw-comonoid-counit", "fib", "fibred c; (w (x) id) = id"),
    ("fib.cw-comonoid-cocomm", "fib", "fibred c; sym = c"),
    ("sigma.triangle-1", "fib", "Sigma(nu); mu = id"),
    ("sigma.triangle-2", "fib", "nu; pi_1^*(mu) = id"),
    ("sigma.delta-c", "fib", "the Sigma pi_1^* comultiplication is c^X_J (x)_X id"),
    ("sigma.mu-w", "fib", "the Sigma pi_1^* counit is w^X_J (x)_X id"),
    ("sigma.bang-object", "fib", "Sigma pi_1^*(1^X) lands on (X, !A) on the nose"),
    ("sigma.functor", "fib", "Sigma preserves composition"),
    ("lemma.sigma-f", "fib", "Sigma({u}^* v); mu = F^S(u) (x) id; Sigma v; mu"),
    ("compr.functor", "fib", "comprehension preserves composition"),
    ("compr.id", "fib", "comprehension of the identity is the identity"),
    ("w.functor", "fib", "W preserves composition"),
    ("w.id", "fib", "W(id) = id"),
    ("lemma.kleisli-banana", "fib", "(|f,u|); pi_2 = s; id (x) d; u"),
    ("plin.lax-n", "fib", "n_{A,B} is linear in its second argument"),
    ("plin.reject-nonlinear", "fib", "a bag-squaring map admits no linear witness"),
    ("d.1", "dsc", "deriving; w = 0"),
    ("d.2", "dsc", "deriving; c = c (x) id; (id (x) deriving) + (id (x) sym; deriving (x) id)"),
    ("d.3", "dsc", "deriving; d = w (x) id"),
    ("d.4", "dsc", "deriving; p = c (x) id; p (x) deriving; deriving"),
    ("d.5", "dsc", "id (x) sym; deriving (x) id; deriving = deriving (x) id; deriving"),
    ("d.nat", "dsc", "!(h) (x) h; deriving = deriving; !(h)"),
    ("seely.iso-right", "dsc", "s; s^-1 = id"),
    ("seely.iso-left", "dsc", "s^-1; s = id"),
    ("t.1-section", "gdsc", "ls(T(f)) = f"),
    ("t.1-functor-id", "gdsc", "T(id) = id"),
    ("t.1-functor-comp", "gdsc", "T(f;g) = T(f); T(g)"),
    ("t.1-phi-iso", "gdsc", "phi = <T(pi_1), T(pi_2)> is invertible"),
    ("t.1-lambda-prod", "gdsc", "lambda(X x Y) = lambda(X) (+) lambda(Y)"),
    ("t.2", "gdsc", "T(U(A)) = (U(A), A), literally"),
    ("t.3", "gdsc", "W(f,u); i_2 = i_2; T(|f,u|)"),
    ("gdsc.key-equation", "gdsc", "id (x) i_2; deriving; s; id (x) d = !p_1 (x) id"),
    ("lemma.seely-diff", "gdsc", "deriving; s = s (x) p_2; id (x) deriving + s (x) p_1; id (x) sym; deriving (x) id"),
    ("prop.d-chain", "gdsc", "D(f;g) = D(f); f^* D(g)"),
    ("prop.d-product", "gdsc", "D(<f,g>) = <D f, D g>; <f,g>^* phi^-1"),
    ("lemma.d-swap", "gdsc", "D_1(f) = swap^* D_2(swap; f)"),
    ("lemma.d-decomp", "gdsc", "D(f) = phi; (p_1; D_1 f) + (p_2; D_2 f)"),
    ("lemma.d2-pi2", "gdsc", "D_2(pi_2) = id"),
    ("d.unique", "gdsc", "exactly one vertical factors T(f) through the lift"),
    ("prop.t3-differential", "gdsc", "D_2(|f,u|) = pi_1^*(id,u); (|f,u|)^* i_2"),
    ("lemma.d2-partial-linear", "gdsc", "D_2((|id,u|); pi_2) = pi_1^*(id,u)"),
    ("lemma.d2-post", "gdsc", "D_2(pi_2; h) = pi_2^* D(h)"),
    ("lemma.d2-pair-zero", "gdsc", "D_2({(f,u)}) = D_2({(f,u)}; pi_2); {(f,u)}^* i_2"),
    ("cor.d-bilinear", "gdsc", "D(n) = phi; (p_1; pi_2^*(id,u')) + (p_2; pi_1^*(id,u))"),
    ("prop.scriptd-precomp", "gdsc", "scriptD; pi_1^* f = D_2({f-dagger}; pi_2)"),
    ("lemma.sigma-scriptd", "gdsc", "Sigma scriptD = c (x) id; id (x) deriving"),
    ("prop.scriptd-nat", "gdsc", "scriptD is natural from W to !^S W"),
    ("prop.fibre-linear", "gdsc", "fibre deriving; d = w (x) id"),
    ("prop.fibre-chain", "gdsc", "fibre deriving; p = c (x) id; p (x) deriving; deriving"),
    ("prop.fibre-leibniz", "gdsc", "fibre deriving; c obeys the two-summand rule"),
    ("gen-partial.consistent", "gdsc", "the generalised deriving restricts to the plain one"),
    ("gen-partial.oracle", "gdsc", "the generalised deriving equals w (x) deriving in Kleisli form"),
    ("scriptd.kleisli-oracle", "gdsc", "scriptD = !pi_2 (x) id; deriving in Kleisli form"),
    ("fibre-deriving.base-shape", "gdsc", "the fibre deriving over I is the base deriving"),
    ("CDC.1", "cdc", "D[f+g] = D[f]+D[g] and D[0] = 0"),
    ("CDC.2", "cdc", "<v,h+k>; D[f] = <v,h>; D[f] + <v,k>; D[f] and <v,0>; D[f] = 0"),
    ("CDC.3", "cdc", "D[id] = pi_2, D[pi_i] = pi_2; pi_i"),
    ("CDC.4", "cdc", "D[<f,g>] = <D[f], D[g]>"),
    ("CDC.5", "cdc", "D[f;g] = <pi_1; f, D[f]>; D[g]"),
    ("CDC.6", "cdc", "<<g,h>,<0,k>>; D[D[f]] = <g,k>; D[f]"),
    ("CDC.7", "cdc", "<<g,h>,<k,0>>; D[D[f]] = <<g,k>,<h,0>>; D[D[f]]"),
    ("cdc.5-frozen", "cdc", "D[x^2 ; y^3](x,v) = 6 x^5 v"),
    ("cdc.6-frozen", "cdc", "axiom six on x^3 reduces to 3 g^2 k"),
    ("cdc.dual-oracle", "cdc", "the Jacobian operator matches dual-number evaluation"),
    ("gcdc.carrier", "gcdc", "L(lambda(X)) = L(X) and L(X x Y) = L(X) x L(Y)"),
    ("GCDC.1", "gcdc", "D[+_X] = pi_2; +_X and D[0_X] = pi_2; 0_X"),
    ("GCDC.2", "gcdc", "<v,h+k>; D[f] = <v,h>; D[f] + <v,k>; D[f] and <v,0>; D[f] = 0"),
    ("GCDC.3", "gcdc", "D[id] = pi_2, D[pi_i] = pi_2; lambda(pi_i)"),
    ("GCDC.4", "gcdc", "D[<f,g>] = <D[f], D[g]>"),
    ("GCDC.5", "gcdc", "D[f;g] = <pi_1; f, D[f]>; D[g]"),
    ("GCDC.6", "gcdc", "<<g,h>,<0,k>>; D[D[f]] = <g,k>; D[f]"),
    ("gcdc.dx-routes", "gcdc", "the comprehension and Seely routes to D agree"),
    ("GCDC.7-probe", "gcdc7-probe", "<<g,h>,<k,0>>; D[D[f]] = <<g,k>,<h,0>>; D[D[f]] (exploratory)"),
];

/// Law ids required to cover every displayed axiom of the main
/// definitions and every supporting lemma checked semantically.
pub const REQUIRED: &[&str] = &[
    "d.1", "d.2", "d.3", "d.4", "d.5",
    "t.1-section", "t.1-phi-iso", "t.2", "t.3",
    "CDC.1", "CDC.2", "CDC.3", "CDC.4", "CDC.5", "CDC.6", "CDC.7",
    "GCDC.1", "GCDC.2", "GCDC.3", "GCDC.4", "GCDC.5", "GCDC.6", "GCDC.7-probe",
    "lnl.triangle-F", "lnl.triangle-U", "lnl.phi-roundtrip",
    "fib.triangle-FS", "fib.triangle-US", "fib.lift-unique",
    "sigma.triangle-1", "sigma.triangle-2", "lemma.sigma-f",
    "lemma.seely-diff", "prop.scriptd-nat", "lemma.sigma-scriptd",
    "prop.d-chain", "prop.d-product", "lemma.d-swap", "lemma.d-decomp",
    "cor.d-bilinear", "prop.t3-differential", "prop.scriptd-precomp",
    "prop.fibre-linear", "prop.fibre-chain", "prop.fibre-leibniz",
    "gdsc.key-equation", "lemma.kleisli-banana",
];

pub fn lookup(law: &str) -> Option<&'static (&'static str, &'static str, &'static str)> {
    LAWS.iter().find(|(id, _, _)| *id == law)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn required_laws_are_registered() {
        for id in REQUIRED {
            assert!(lookup(id).is_some(), "missing law {id}");
        }
    }

    #[test]
    fn registry_has_no_duplicates() {
        let mut seen = std::collections::BTreeSet::new();
        for (id, _, _) in LAWS {
            assert!(seen.insert(id), "duplicate law {id}");
        }
    }
}
