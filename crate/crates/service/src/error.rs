use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use icgame::families::FamilyError;
use icgame::game::{MoveError, Player};
use icgame::graph::GraphError;
use icgame::solver::SolveError;
use serde_json::json;
use thiserror::Error;

/// Every failure the API reports. Responses carry
/// `{"error": {"kind": ..., "message": ..., "detail": ...}}`.
#[derive(Debug, Error)]
pub enum ApiError {
    #[error("{0}")]
    BadRequest(String),
    #[error("{0}")]
    Capacity(String),
    #[error("no session with id {0}")]
    UnknownSession(String),
    #[error("illegal move: {0}")]
    IllegalMove(MoveError),
    #[error("it is {mover}'s turn, not the {actor}'s")]
    OutOfTurn { mover: Player, actor: &'static str },
    #[error("stale action counter {expected}, session is at {current}")]
    StaleCounter { expected: u64, current: u64 },
    #[error("the game is over")]
    Terminal,
    #[error(transparent)]
    Infeasible(SolveError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<GraphError> for ApiError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::CapacityExceeded { .. } => ApiError::Capacity(e.to_string()),
            _ => ApiError::BadRequest(e.to_string()),
        }
    }
}

impl From<FamilyError> for ApiError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Graph(g) => g.into(),
            other => ApiError::BadRequest(other.to_string()),
        }
    }
}

impl From<SolveError> for ApiError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Terminal => ApiError::Terminal,
            other => ApiError::Infeasible(other),
        }
    }
}

impl ApiError {
    pub fn kind(&self) -> &'static str {
        match self {
            ApiError::BadRequest(_) => "bad_request",
            ApiError::Capacity(_) => "capacity_exceeded",
            ApiError::UnknownSession(_) => "unknown_session",
            ApiError::IllegalMove(_) => "illegal_move",
            ApiError::OutOfTurn { .. } => "out_of_turn",
            ApiError::StaleCounter { .. } => "stale_counter",
            ApiError::Terminal => "terminal",
            ApiError::Infeasible(_) => "infeasible",
            ApiError::Internal(_) => "internal",
        }
    }

    pub fn status(&self) -> StatusCode {
        match self {
            ApiError::BadRequest(_) | ApiError::Capacity(_) => StatusCode::BAD_REQUEST,
            ApiError::UnknownSession(_) => StatusCode::NOT_FOUND,
            ApiError::OutOfTurn { .. } | ApiError::StaleCounter { .. } | ApiError::Terminal => {
                StatusCode::CONFLICT
            }
            ApiError::IllegalMove(_) | ApiError::Infeasible(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ApiError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }

    fn detail(&self) -> serde_json::Value {
        match self {
            ApiError::IllegalMove(e) => json!(e),
            ApiError::Infeasible(e) => json!(e),
            ApiError::OutOfTurn { mover, actor } => json!({ "mover": mover, "actor": actor }),
            ApiError::StaleCounter { expected, current } => {
                json!({ "expected": expected, "current": current })
            }
            _ => serde_json::Value::Null,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({
            "error": { "kind": self.kind(), "message": self.to_string(), "detail": self.detail() }
        });
        (self.status(), Json(body)).into_response()
    }
}
