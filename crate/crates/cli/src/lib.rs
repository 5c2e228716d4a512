//! Request dispatch for the `hensel` binary.
//!
//! Every subcommand reads one JSON request and produces one [`Response`].
//! Responses are serialised with sorted keys so that identical requests give
//! byte-identical output.

use hensel_core::hensel::{hensel_lift, special_zero, transformation_chain, SpecialOutcome};
use hensel_core::json::{Coefficients, FieldDescriptor, JsonField, PolyInput, SetupDescriptor};
use hensel_core::kernel::{catalogue, TraceStep};
use hensel_core::arith::charpoly::char_poly;
use hensel_core::{
    kernel_decide, verify_decision, CoefficientField, CommutingSquare, Error, Extension, KernelDecision,
    MinimalValuationSetup, NewtonPolygon, Padic, PolyRing, PrecisionPolicy, Ring, Tadic, Value, ValuedField,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

pub const COMMANDS: [&str; 10] =
    ["polygon", "lift", "special", "chain", "extval", "charpoly", "validate", "decide", "verify", "fuzz"];

/// Command-line overrides applied on top of the request.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub precision: Option<u32>,
    pub max_precision: Option<u32>,
    pub trace: bool,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InvalidSetup,
    Precision,
    BadRequest,
    Rejected,
    Internal,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::InvalidSetup => 1,
            Status::Precision => 2,
            Status::BadRequest => 3,
            Status::Rejected => 4,
            Status::Internal => 5,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Response {
    pub status: Status,
    pub result: Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Json>,
    pub trace: Vec<TraceStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Response {
    fn ok(result: Json) -> Self {
        Response { status: Status::Ok, result, certificate: None, trace: Vec::new(), error: None }
    }

    fn failure(status: Status, message: String, result: Json) -> Self {
        Response { status, result, certificate: None, trace: Vec::new(), error: Some(message) }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("response serialises");
        let mut text = serde_json::to_string_pretty(&value).expect("response serialises");
        text.push('\n');
        text
    }
}

enum Failure {
    Request(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Request(e.to_string())
    }
}

impl From<Failure> for Response {
    fn from(f: Failure) -> Self {
        match f {
            Failure::Request(msg) => Response::failure(Status::BadRequest, msg, Json::Null),
            Failure::Core(e) => {
                let status = match &e {
                    Error::InvalidSetup { .. } => Status::InvalidSetup,
                    Error::PrecisionExhausted { .. } => Status::Precision,
                    Error::Inconsistent(_) => Status::Internal,
                    _ => Status::BadRequest,
                };
                let result = match &e {
                    Error::InvalidSetup { axiom, element } => json!({ "axiom": axiom, "element": element }),
                    Error::PrecisionExhausted { required, max } => json!({ "required": required, "max": max }),
                    _ => Json::Null,
                };
                Response::failure(status, e.to_string(), result)
            }
        }
    }
}

type Outcome = Result<Response, Failure>;

/// Runs one subcommand on a JSON request.
pub fn run(command: &str, input: &str, options: &Options) -> Response {
    let outcome = match command {
        "polygon" => parse(input).and_then(polygon),
        "lift" => parse(input).and_then(|r| lift(r, options)),
        "special" => parse(input).and_then(|r| special(r, options)),
        "chain" => parse(input).and_then(|r| chain(r, options)),
        "extval" => parse(input).and_then(|r| extval(r, options)),
        "charpoly" => parse(input).and_then(charpoly),
        "validate" => parse(input).and_then(validate),
        "decide" => parse(input).and_then(|r| decide(r, options)),
        "verify" => parse(input).and_then(|r| verify(r, options)),
        "fuzz" => parse(input).and_then(|r| fuzz(r, options)),
        other => Err(Failure::Request(format!("unknown subcommand `{other}`; expected one of {}", COMMANDS.join(", ")))),
    };
    let mut response = outcome.unwrap_or_else(Response::from);
    if !options.trace {
        response.trace.clear();
    }
    response
}

fn parse<T: DeserializeOwned>(input: &str) -> Result<T, Failure> {
    Ok(serde_json::from_str(input)?)
}

fn step(step: &str, detail: impl Into<String>) -> TraceStep {
    TraceStep { step: step.into(), detail: detail.into() }
}

fn policy(request: Option<PrecisionPolicy>, options: &Options) -> Result<PrecisionPolicy, Failure> {
    let mut p = request.unwrap_or_default();
    if let Some(n) = options.precision {
        p.initial = n;
    }
    if let Some(n) = options.max_precision {
        p.max = n;
        p.initial = p.initial.min(n);
    }
    if p.initial == 0 || p.growth < 2 || p.initial > p.max {
        return Err(Failure::Request(format!(
            "precision policy needs 1 ≤ initial ≤ max and growth ≥ 2, got {}/{}/{}",
            p.initial, p.growth, p.max
        )));
    }
    Ok(p)
}

/// Explicit precision: the flag wins over the request, then the policy's
/// initial value; never above the maximum.
fn precision(request: Option<u32>, options: &Options) -> Result<u32, Failure> {
    let n = options.precision.or(request).unwrap_or(PrecisionPolicy::default().initial);
    let max = options.max_precision.unwrap_or(PrecisionPolicy::default().max);
    if n == 0 {
        return Err(Failure::Request("precision must be positive".into()));
    }
    if n > max {
        return Err(Error::PrecisionExhausted { required: n as u64, max }.into());
    }
    Ok(n)
}

/// Runs `$body` with `$k` bound to the field named by a descriptor.
macro_rules! with_field {
    ($desc:expr, $k:ident => $body:expr) => {
        match $desc {
            FieldDescriptor::Padic { prime } => {
                let $k = Padic::new(*prime)?;
                $body
            }
            FieldDescriptor::Tadic { coefficients } => {
                hensel_core::with_coefficients!(Coefficients::parse(coefficients)?, c => {
                    let $k = Tadic::new(c);
                    $body
                })
            }
        }
    };
}

fn describe_poly<K: ValuedField>(k: &K, p: &hensel_core::Poly<K::Elem>) -> String {
    PolyRing::with_var(k.clone(), "X").display(p)
}

fn poly_json<K: JsonField>(k: &K, p: &hensel_core::Poly<K::Elem>) -> Json {
    json!({ "text": describe_poly(k, p), "coefficients": k.poly_to_json(p) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonRequest {
    values: Option<Vec<Value>>,
    field: Option<FieldDescriptor>,
    poly: Option<PolyInput>,
    #[serde(default)]
    dump: bool,
}

fn polygon_json(polygon: &NewtonPolygon, dump: bool) -> Result<Json, Failure> {
    let isolated = polygon
        .isolated_slopes()
        .into_iter()
        .map(|(k, _)| Ok(json!({ "index": k, "root_valuation": polygon.root_valuation(k)? })))
        .collect::<Result<Vec<_>, Failure>>()?;
    let mut out = serde_json::to_value(polygon)?;
    out["isolated_slopes"] = Json::Array(isolated);
    if dump {
        out["dump"] = Json::String(polygon.coordinate_dump());
    }
    Ok(out)
}

fn polygon(r: PolygonRequest) -> Outcome {
    let polygon = match (r.values, r.field, r.poly) {
        (Some(values), None, None) => NewtonPolygon::from_values(&values)?,
        (None, Some(field), Some(poly)) => with_field!(&field, k => {
            let g = k.poly_from_input(&poly)?;
            let values: Vec<Value> = g.coeffs().iter().map(|c| k.valuation(c)).collect();
            NewtonPolygon::from_values(&values)?
        }),
        _ => return Err(Failure::Request("polygon needs either `values` or both `field` and `poly`".into())),
    };
    let mut response = Response::ok(polygon_json(&polygon, r.dump)?);
    response.trace = polygon.vertices().iter().map(|p| step("vertex", format!("({}, {})", p.index, p.value))).collect();
    Ok(response)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LiftRequest {
    field: FieldDescriptor,
    f: PolyInput,
    precision: Option<u32>,
}

fn lift(r: LiftRequest, options: &Options) -> Outcome {
    let n = precision(r.precision, options)?;
    with_field!(&r.field, k => {
        let f = k.poly_from_input(&r.f)?;
        let alpha = hensel_lift(&f, &k, n)?;
        let mut response = Response::ok(json!({
            "alpha": k.display_truncated(&alpha),
            "value": k.elem_to_json(&k.lift(&alpha)),
            "precision": n,
        }));
        response.trace = vec![step("nagata", describe_poly(&k, &f)), step("precision", n.to_string())];
        Ok(response)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecialRequest {
    field: FieldDescriptor,
    t: PolyInput,
    precision: Option<u32>,
}

fn special(r: SpecialRequest, options: &Options) -> Outcome {
    let n = precision(r.precision, options)?;
    with_field!(&r.field, k => {
        let t = k.poly_from_input(&r.t)?;
        let beta = special_zero(&t, &k, n)?;
        let mut response = Response::ok(json!({
            "beta": k.display_truncated(&beta),
            "value": k.elem_to_json(&k.lift(&beta)),
            "precision": n,
        }));
        response.trace = vec![step("special", describe_poly(&k, &t)), step("precision", n.to_string())];
        Ok(response)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainRequest {
    field: FieldDescriptor,
    g: PolyInput,
    k: usize,
    precision: Option<u32>,
}

fn chain(r: ChainRequest, options: &Options) -> Outcome {
    let n = precision(r.precision, options)?;
    with_field!(&r.field, field => {
        let g = field.poly_from_input(&r.g)?;
        let c = transformation_chain(&g, r.k, &field)?;
        let special = match &c.special {
            SpecialOutcome::TrivialZero => Json::String("trivial_zero".into()),
            SpecialOutcome::Special(t) => poly_json(&field, t),
        };
        let moebius = match &c.moebius {
            None => Json::Null,
            Some(m) => json!({
                "a": field.elem_to_json(&m.a),
                "b": field.elem_to_json(&m.b),
                "c": field.elem_to_json(&m.c),
                "d": field.elem_to_json(&m.d),
            }),
        };
        let beta = c.beta(n)?.map(|b| field.display_truncated(&b));
        let consistent = c.check_moebius(n)?;
        if !consistent {
            return Err(Error::Inconsistent("Möbius form does not map β to α".into()).into());
        }
        let alpha = if c.root_valuation >= Value::ZERO {
            Json::String(field.display_truncated(&c.alpha(n)?))
        } else {
            Json::Null
        };
        let polygon = hensel_core::compute_polygon(&g, &field)?;
        let mut response = Response::ok(json!({
            "k": c.k,
            "root_valuation": c.root_valuation,
            "scale": field.elem_to_json(&c.scale),
            "h": poly_json(&field, &c.h),
            "f": poly_json(&field, &c.f),
            "special": special,
            "moebius": moebius,
            "mu": field.display_truncated(&c.mu(n)?),
            "beta": beta,
            "alpha": alpha,
            "precision": n,
        }));
        let mut trace: Vec<TraceStep> =
            polygon.vertices().iter().map(|p| step("vertex", format!("({}, {})", p.index, p.value))).collect();
        trace.push(step("segment_to_h", describe_poly(&field, &c.h)));
        trace.push(step("h_to_nagata", describe_poly(&field, &c.f)));
        trace.push(step(
            "nagata_to_special",
            match &c.special {
                SpecialOutcome::TrivialZero => "a_0 = 0, μ = 0".to_string(),
                SpecialOutcome::Special(t) => describe_poly(&field, t),
            },
        ));
        trace.push(step("precision", n.to_string()));
        response.trace = trace;
        Ok(response)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtvalRequest {
    field: FieldDescriptor,
    f: PolyInput,
    q: PolyInput,
    policy: Option<PrecisionPolicy>,
}

fn extval(r: ExtvalRequest, options: &Options) -> Outcome {
    let p = policy(r.policy, options)?;
    with_field!(&r.field, k => {
        let f = k.poly_from_input(&r.f)?;
        let q = k.poly_from_input(&r.q)?;
        let ext = Extension::new(k.clone(), f, p)?;
        let (value, n) = ext.value_with_precision(&q)?;
        let residue = if value == Value::ZERO {
            Some(k.elem_to_json(&ext.residue_in_extension(&q)?))
        } else {
            None
        };
        let mut response = Response::ok(json!({ "value": value, "precision": n, "residue": residue }));
        response.trace = vec![step("precision", n.to_string())];
        Ok(response)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CharpolyRequest {
    field: FieldDescriptor,
    f: PolyInput,
    q: PolyInput,
}

fn charpoly(r: CharpolyRequest) -> Outcome {
    with_field!(&r.field, k => {
        let ring = PolyRing::with_var(k.clone(), "X");
        let f = k.poly_from_input(&r.f)?;
        let q = k.poly_from_input(&r.q)?;
        let g = char_poly(&ring, &q, &f)?;
        Ok(Response::ok(json!({
            "text": PolyRing::with_var(k.clone(), "T").display(&g),
            "coefficients": k.poly_to_json(&g),
        })))
    })
}

/// A catalogue name or a full descriptor.
#[derive(Deserialize)]
#[serde(untagged)]
enum SetupInput {
    Named(String),
    Described(SetupDescriptor),
}

impl SetupInput {
    fn descriptor(&self) -> Result<SetupDescriptor, Failure> {
        match self {
            SetupInput::Named(name) => Ok(catalogue::descriptor(name)?),
            SetupInput::Described(d) => Ok(d.clone()),
        }
    }
}

/// Runs `$body` with `$setup` bound to the validated setup.
macro_rules! with_setup {
    ($input:expr, $setup:ident => $body:expr) => {{
        let descriptor = $input.descriptor()?;
        hensel_core::with_coefficients!(descriptor.coefficients()?, c => {
            let $setup = descriptor.build(c)?;
            $body
        })
    }};
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValidateRequest {
    setup: SetupInput,
}

fn validate(r: ValidateRequest) -> Outcome {
    with_setup!(r.setup, setup => {
        let report = setup.validate()?;
        let mut response = Response::ok(serde_json::to_value(&report)?);
        response.trace = report
            .axioms
            .iter()
            .map(|a| step(&a.axiom, format!("{} on {} checks", if a.passed { "holds" } else { "fails" }, a.checked)))
            .collect();
        Ok(response)
    })
}

fn square<C: CoefficientField>(
    setup: MinimalValuationSetup<C>,
    f: &str,
    policy: PrecisionPolicy,
) -> Result<CommutingSquare<C>, Failure> {
    setup.validate()?;
    let f = setup.ring().parse_poly(f, "X")?;
    Ok(CommutingSquare::new(setup, f, policy)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecideRequest {
    setup: SetupInput,
    f: String,
    q: String,
    policy: Option<PrecisionPolicy>,
}

fn decide(r: DecideRequest, options: &Options) -> Outcome {
    let p = policy(r.policy, options)?;
    with_setup!(r.setup, setup => {
        let sq = square(setup, &r.f, p)?;
        let q = sq.setup().ring().parse_poly(&r.q, "X")?;
        let outcome = kernel_decide(&sq, &q)?;
        if !verify_decision(&outcome.decision, &sq) {
            return Err(Error::Inconsistent("decision failed its own verification".into()).into());
        }
        let mut response = Response::ok(json!({
            "kind": kind(&outcome.decision),
            "gamma": outcome.decision.gamma(),
            "branch": outcome.decision.branch(),
            "verified": true,
        }));
        response.certificate = Some(serde_json::to_value(&outcome.decision)?);
        response.trace = outcome.trace;
        Ok(response)
    })
}

fn kind(d: &KernelDecision) -> &'static str {
    match d {
        KernelDecision::InSf { .. } => "in_sf",
        KernelDecision::NilpotentWitness { .. } => "nilpotent_witness",
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VerifyRequest {
    setup: SetupInput,
    f: String,
    certificate: KernelDecision,
    policy: Option<PrecisionPolicy>,
}

fn verify(r: VerifyRequest, options: &Options) -> Outcome {
    let p = policy(r.policy, options)?;
    with_setup!(r.setup, setup => {
        let sq = square(setup, &r.f, p)?;
        let verified = verify_decision(&r.certificate, &sq);
        let mut response = Response::ok(json!({ "verified": verified }));
        if !verified {
            response.status = Status::Rejected;
            response.error = Some("certificate does not verify".into());
        }
        response.trace = vec![step("branch", r.certificate.branch())];
        Ok(response)
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FuzzRequest {
    setup: SetupInput,
    /// Defaults to the catalogue's three polynomials for a named setup.
    f: Option<Vec<String>>,
    count: usize,
    #[serde(default = "default_height")]
    height: i64,
    policy: Option<PrecisionPolicy>,
}

fn default_height() -> i64 {
    10
}

fn fuzz(r: FuzzRequest, options: &Options) -> Outcome {
    let p = policy(r.policy, options)?;
    let polys: Vec<String> = match (&r.f, &r.setup) {
        (Some(list), _) if !list.is_empty() => list.clone(),
        (None, SetupInput::Named(name)) => catalogue::nagata_polys(name)?.iter().map(|s| s.to_string()).collect(),
        _ => return Err(Failure::Request("fuzz needs a nonempty `f` list for a described setup".into())),
    };
    let seed = options.seed.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    with_setup!(r.setup, setup => {
        let squares = polys
            .iter()
            .map(|f| square(setup.clone(), f, p))
            .collect::<Result<Vec<_>, Failure>>()?;
        let (mut in_sf, mut nilpotent, mut rejected) = (0usize, 0usize, Vec::new());
        for i in 0..r.count {
            let sq = &squares[i % squares.len()];
            let degree = sq.f().degree().unwrap_or(1);
            let q = catalogue::random_q(sq.setup(), degree, r.height, &mut rng);
            let outcome = kernel_decide(sq, &q)?;
            if !verify_decision(&outcome.decision, sq) {
                rejected.push(json!({ "f": polys[i % polys.len()], "q": sq.poly_ring().display(&q) }));
            }
            match outcome.decision {
                KernelDecision::InSf { .. } => in_sf += 1,
                KernelDecision::NilpotentWitness { .. } => nilpotent += 1,
            }
        }
        let mut response = Response::ok(json!({
            "seed": seed,
            "decisions": r.count,
            "in_sf": in_sf,
            "nilpotent_witness": nilpotent,
            "rejected": rejected,
        }));
        if !rejected.is_empty() {
            response.status = Status::Rejected;
            response.error = Some(format!("{} certificates failed verification", rejected.len()));
        }
        Ok(response)
    })
}
