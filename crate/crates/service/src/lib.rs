//! HTTP sessions for playing independence coloring games against the exact
//! engine, plus what-if evaluation of every legal move.
//!
//! | route | body | reply |
//! |---|---|---|
//! | `POST /api/session` | `{graph6 \| family, variant, humanRole, seed?}` | session view |
//! | `GET /api/session/{id}` | | session view |
//! | `POST /api/session/{id}/move` | `{vertex}` or `{pass: true}`, `counter?` | session view |
//! | `POST /api/session/{id}/engine?counter=` | | `{state, value, move, evaluation}` |
//! | `GET /api/session/{id}/eval` | | `[{move, value}]` |
//! | `GET /api/session/{id}/transcript` | | JSON lines |
//! | `GET /api/families/{name}?params` | | `{graph6, n, layout, labels}` |
//!
//! Every session reply carries the session's action counter in the
//! `x-action-counter` header (and in the body where the body is an object).

mod error;
pub mod layout;
mod session;

pub use error::ApiError;
pub use session::{
    ColoredVertex, CreateRequest, EngineReply, FamilyRequest, HumanRole, Session, SessionStore,
    SessionView, StateView,
};

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Duration;

use axum::extract::{Path, Query, State};
use axum::http::header::{HeaderName, HeaderValue, CONTENT_DISPOSITION, CONTENT_TYPE};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use icgame::families::FamilySpec;
use icgame::game::Move;
use serde::Deserialize;
use serde_json::json;
use tower_http::services::ServeDir;

pub const COUNTER_HEADER: &str = "x-action-counter";

/// Default idle time after which a session is dropped.
pub const IDLE_EXPIRY: Duration = Duration::from_secs(3600);

type Store = Arc<SessionStore>;

fn with_counter(counter: u64, body: impl IntoResponse) -> Response {
    let mut r = body.into_response();
    r.headers_mut().insert(
        HeaderName::from_static(COUNTER_HEADER),
        HeaderValue::from(counter),
    );
    r
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    vertex: Option<usize>,
    #[serde(default)]
    pass: bool,
    counter: Option<u64>,
}

#[derive(Debug, Deserialize)]
struct CounterQuery {
    counter: Option<u64>,
}

async fn create(
    State(store): State<Store>,
    Json(req): Json<CreateRequest>,
) -> Result<Response, ApiError> {
    let view = store.create(req).await?;
    Ok(with_counter(view.counter, Json(view)))
}

async fn get_session(
    State(store): State<Store>,
    Path(id): Path<String>,
) -> Result<Response, ApiError> {
    let view = store.view(&id).await?;
    Ok(with_counter(view.counter, Json(view)))
}

async fn submit_move(
    State(store): State<Store>,
    Path(id): Path<String>,
    Json(req): Json<MoveRequest>,
) -> Result<Response, ApiError> {
    let mv = match (req.vertex, req.pass) {
        (Some(v), false) => Move::Vertex(v),
        (None, true) => Move::Pass,
        _ => {
            return Err(ApiError::BadRequest(
                "give either `vertex` or `pass: true`".into(),
            ))
        }
    };
    let view = store.submit(&id, mv, req.counter).await?;
    Ok(with_counter(view.counter, Json(view)))
}

async fn engine_move(
    State(store): State<Store>,
    Path(id): Path<String>,
    Query(q): Query<CounterQuery>,
) -> Result<Response, ApiError> {
    let reply = store.engine(&id, q.counter).await?;
    Ok(with_counter(reply.counter, Json(reply)))
}

async fn eval(State(store): State<Store>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let (counter, values) = store.evaluate(&id).await?;
    Ok(with_counter(counter, Json(values)))
}

async fn transcript(
    State(store): State<Store>,
    Path(id): Path<String>,
) -> Result<Response, ApiError> {
    let (counter, lines) = store.transcript(&id).await?;
    let disposition = format!("attachment; filename=\"transcript-{id}.jsonl\"");
    Ok(with_counter(
        counter,
        (
            [
                (CONTENT_TYPE, "application/x-ndjson".to_string()),
                (CONTENT_DISPOSITION, disposition),
            ],
            lines,
        ),
    ))
}

/// `layoutSeed` picks the layout; every other query parameter goes to the
/// family.
async fn family(
    State(store): State<Store>,
    Path(name): Path<String>,
    Query(mut params): Query<BTreeMap<String, String>>,
) -> Result<Response, ApiError> {
    let seed = match params.remove("layoutSeed") {
        Some(s) => s
            .parse()
            .map_err(|_| ApiError::BadRequest(format!("layoutSeed `{s}` is not an integer")))?,
        None => store.default_seed(),
    };
    let spec = FamilySpec::from_name_and_params(&name, &params)?;
    let fam = spec.generate()?;
    let g = fam.graph;
    let layout = tokio::task::spawn_blocking({
        let g = g.clone();
        move || layout::layout(&g, seed)
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))?;
    Ok(Json(json!({
        "spec": spec.to_string(),
        "graph6": g.to_graph6(),
        "n": g.n(),
        "layout": layout,
        "labels": fam.labels,
    }))
    .into_response())
}

/// The API routes, plus static files from `assets` for everything else.
pub fn router(store: Store, assets: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/session", post(create))
        .route("/api/session/{id}", get(get_session))
        .route("/api/session/{id}/move", post(submit_move))
        .route("/api/session/{id}/engine", post(engine_move))
        .route("/api/session/{id}/eval", get(eval))
        .route("/api/session/{id}/transcript", get(transcript))
        .route("/api/families/{name}", get(family))
        .with_state(store);
    match assets {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

/// Serves until the process is stopped, sweeping idle sessions once a
/// minute.
pub async fn serve(addr: SocketAddr, store: Store, assets: Option<PathBuf>) -> std::io::Result<()> {
    let sweeper = store.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.sweep().await;
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(store, assets)).await
}
