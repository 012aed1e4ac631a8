//! Drives the HTTP API in-process: create a P_5 game, ask for what-if
//! values, move, let the engine reply, and download the transcript.
//!
//!     cargo run -p icgame-service --example session
//!
//! `icg serve` exposes the same routes on a socket.

use std::sync::Arc;

use axum::body::Body;
use axum::http::Request;
use axum::Router;
use http_body_util::BodyExt;
use icgame::solver::SolveLimits;
use icgame_service::{router, SessionStore, IDLE_EXPIRY};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> String {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let text = String::from_utf8_lossy(&bytes).into_owned();
    println!("{method} {uri} -> {status}");
    text
}

#[tokio::main]
async fn main() {
    let app = router(
        Arc::new(SessionStore::new(SolveLimits::default(), IDLE_EXPIRY, 1)),
        None,
    );
    let created: Value = serde_json::from_str(
        &call(
            &app,
            "POST",
            "/api/session",
            Some(json!({"family": "path:5", "variant": "A", "humanRole": "alice"})),
        )
        .await,
    )
    .unwrap();
    let id = created["id"].as_str().unwrap();
    println!("  legal {}", created["state"]["legal"]);
    println!(
        "  {}",
        call(&app, "GET", &format!("/api/session/{id}/eval"), None).await
    );
    let moved = call(
        &app,
        "POST",
        &format!("/api/session/{id}/move"),
        Some(json!({"vertex": 2})),
    )
    .await;
    let moved: Value = serde_json::from_str(&moved).unwrap();
    println!("  protected {}", moved["state"]["protected"]);
    let reply: Value =
        serde_json::from_str(&call(&app, "POST", &format!("/api/session/{id}/engine"), None).await)
            .unwrap();
    println!(
        "  engine played {} (value {})",
        reply["move"], reply["value"]
    );
    let illegal = call(
        &app,
        "POST",
        &format!("/api/session/{id}/move"),
        Some(json!({"vertex": 1})),
    )
    .await;
    println!("  {illegal}");
    print!(
        "{}",
        call(&app, "GET", &format!("/api/session/{id}/transcript"), None).await
    );
}
