use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use icgame::game::{Transcript, TranscriptEntry, Variant};
use icgame::graph::Graph;
use icgame::solver::{solve, SolveLimits};
use icgame_service::{router, SessionStore, COUNTER_HEADER, IDLE_EXPIRY};
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    router(
        Arc::new(SessionStore::new(SolveLimits::default(), IDLE_EXPIRY, 0)),
        None,
    )
}

struct Reply {
    status: StatusCode,
    counter: Option<u64>,
    text: String,
}

impl Reply {
    fn json(&self) -> Value {
        serde_json::from_str(&self.text).unwrap_or_else(|e| panic!("{e}: {}", self.text))
    }
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> Reply {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(b) => {
            req = req.header("content-type", "application/json");
            Body::from(b.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let counter = resp
        .headers()
        .get(COUNTER_HEADER)
        .map(|v| v.to_str().unwrap().parse().unwrap());
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    Reply {
        status,
        counter,
        text: String::from_utf8(bytes.to_vec()).unwrap(),
    }
}

async fn create(app: &Router, body: Value) -> Value {
    let r = call(app, "POST", "/api/session", Some(body)).await;
    assert_eq!(r.status, StatusCode::OK, "{}", r.text);
    r.json()
}

fn id(v: &Value) -> String {
    v["id"].as_str().unwrap().to_string()
}

#[tokio::test]
async fn create_from_family_and_graph6() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "path:6", "variant": "A", "humanRole": "alice"}),
    )
    .await;
    assert_eq!(s["state"]["mover"], "Alice");
    assert_eq!(s["n"], 6);
    assert_eq!(s["counter"], 0);
    assert_eq!(s["state"]["legal"], json!([0, 1, 2, 3, 4, 5]));
    assert_eq!(s["layout"].as_array().unwrap().len(), 6);

    let k3 = create(
        &app,
        json!({"graph6": "Bw", "variant": "BA", "humanRole": "bob"}),
    )
    .await;
    assert_eq!(k3["state"]["mover"], "Bob");
    assert_eq!(k3["edges"], json!([[0, 1], [0, 2], [1, 2]]));

    let named = create(
        &app,
        json!({"family": {"name": "nary", "params": {"n": 2, "d": 2}}, "variant": "AliceSkip", "humanRole": "observer"}),
    )
    .await;
    assert_eq!(named["n"], 7);
    assert_eq!(named["variant"], "AliceSkip");
    let r = call(
        &app,
        "POST",
        "/api/session",
        Some(json!({"family": "path:3", "variant": "C", "humanRole": "alice"})),
    )
    .await;
    assert!(r.status.is_client_error());

    let bad = call(
        &app,
        "POST",
        "/api/session",
        Some(json!({"graph6": "??", "variant": "A", "humanRole": "alice"})),
    )
    .await;
    assert_eq!(bad.status, StatusCode::BAD_REQUEST);
    assert_eq!(bad.json()["error"]["kind"], "bad_request");
    let both = json!({"graph6": "Bw", "family": "path:3", "variant": "A", "humanRole": "alice"});
    assert_eq!(
        call(&app, "POST", "/api/session", Some(both)).await.status,
        StatusCode::BAD_REQUEST
    );
    let huge = json!({"family": "g3:4", "variant": "A", "humanRole": "observer"});
    let r = call(&app, "POST", "/api/session", Some(huge)).await;
    assert_eq!(r.json()["error"]["kind"], "capacity_exceeded");
}

#[tokio::test]
async fn what_if_values_on_p5() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "path:5", "variant": "A", "humanRole": "alice"}),
    )
    .await;
    let r = call(&app, "GET", &format!("/api/session/{}/eval", id(&s)), None).await;
    assert_eq!(r.status, StatusCode::OK);
    assert_eq!(r.counter, Some(0));
    let values: Vec<(u64, u64)> = r
        .json()
        .as_array()
        .unwrap()
        .iter()
        .map(|mv| {
            (
                mv["move"]["vertex"].as_u64().unwrap(),
                mv["value"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(values, [(0, 3), (1, 3), (2, 2), (3, 3), (4, 3)]);
    let p5 = Graph::from_graph6(s["graph6"].as_str().unwrap()).unwrap();
    let optimum = values.iter().map(|&(_, v)| v).min().unwrap();
    assert_eq!(
        optimum as u32,
        solve(&p5, Variant::A, SolveLimits::default()).unwrap()
    );
}

#[tokio::test]
async fn illegal_and_out_of_turn_moves_are_structured() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "path:4", "variant": "A", "humanRole": "alice"}),
    )
    .await;
    let uri = format!("/api/session/{}/move", id(&s));
    let ok = call(&app, "POST", &uri, Some(json!({"vertex": 1}))).await;
    assert_eq!(ok.status, StatusCode::OK);
    assert_eq!(ok.counter, Some(1));
    let after = ok.json();
    assert_eq!(after["state"]["protected"], json!([0, 2]));
    assert_eq!(
        after["state"]["colored"],
        json!([{"vertex": 1, "color": 1}])
    );

    // Bob (the engine) is to move now
    let r = call(&app, "POST", &uri, Some(json!({"vertex": 3}))).await;
    assert_eq!(r.status, StatusCode::CONFLICT);
    assert_eq!(r.json()["error"]["kind"], "out_of_turn");

    // engine (Alice) opens P_3 at vertex 0, so vertex 1 is protected by 0
    let s3 = create(
        &app,
        json!({"family": "path:3", "variant": "A", "humanRole": "bob"}),
    )
    .await;
    let engine = call(
        &app,
        "POST",
        &format!("/api/session/{}/engine", id(&s3)),
        None,
    )
    .await
    .json();
    assert_eq!(engine["move"], json!({"vertex": 0}));
    assert_eq!(engine["value"], 2);
    let after = call(
        &app,
        "POST",
        &format!("/api/session/{}/move", id(&s3)),
        Some(json!({"vertex": 1})),
    )
    .await;
    assert_eq!(after.status, StatusCode::UNPROCESSABLE_ENTITY);
    let err = after.json()["error"].clone();
    assert_eq!(err["kind"], "illegal_move");
    assert_eq!(
        err["detail"],
        json!({"kind": "protected", "vertex": 1, "by": 0})
    );
    assert!(err["message"]
        .as_str()
        .unwrap()
        .contains("protected by neighbor 0"));

    let none = call(
        &app,
        "POST",
        &format!("/api/session/{}/move", id(&s3)),
        Some(json!({})),
    )
    .await;
    assert_eq!(none.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn engine_takes_a_forced_move() {
    let app = app();
    // Alice takes leaf 1 of K_{1,2}; only leaf 2 remains legal for Bob
    let s = create(
        &app,
        json!({"family": "star:2", "variant": "A", "humanRole": "alice"}),
    )
    .await;
    let sid = id(&s);
    let view = call(
        &app,
        "POST",
        &format!("/api/session/{sid}/move"),
        Some(json!({"vertex": 1})),
    )
    .await
    .json();
    assert_eq!(view["state"]["legal"], json!([2]));
    let r = call(&app, "POST", &format!("/api/session/{sid}/engine"), None).await;
    assert_eq!(r.counter, Some(2));
    let reply = r.json();
    assert_eq!(reply["move"], json!({"vertex": 2}));
    assert_eq!(reply["value"], 2);
    assert_eq!(reply["state"]["state"]["round"], 2);
    // now it is the human's turn, so the engine refuses
    let r = call(&app, "POST", &format!("/api/session/{sid}/engine"), None).await;
    assert_eq!(r.json()["error"]["kind"], "out_of_turn");
}

#[tokio::test]
async fn oversized_sessions_report_infeasible() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "g3:2", "variant": "A", "humanRole": "observer"}),
    )
    .await;
    assert_eq!(s["n"], 289);
    let r = call(&app, "GET", &format!("/api/session/{}/eval", id(&s)), None).await;
    assert_eq!(r.status, StatusCode::UNPROCESSABLE_ENTITY);
    let err = r.json()["error"].clone();
    assert_eq!(err["kind"], "infeasible");
    assert!(err["message"]
        .as_str()
        .unwrap()
        .starts_with("exact solve infeasible"));
    assert_eq!(err["detail"]["kind"], "too_many_vertices");
    let r = call(
        &app,
        "POST",
        &format!("/api/session/{}/engine", id(&s)),
        None,
    )
    .await;
    assert_eq!(r.json()["error"]["kind"], "infeasible");
}

#[tokio::test]
async fn stale_counters_and_unknown_sessions() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "path:4", "variant": "A", "humanRole": "alice"}),
    )
    .await;
    let uri = format!("/api/session/{}/move", id(&s));
    assert_eq!(
        call(&app, "POST", &uri, Some(json!({"vertex": 0, "counter": 0})))
            .await
            .status,
        StatusCode::OK
    );
    let stale = call(&app, "POST", &uri, Some(json!({"vertex": 3, "counter": 0}))).await;
    assert_eq!(stale.status, StatusCode::CONFLICT);
    assert_eq!(
        stale.json()["error"]["detail"],
        json!({"expected": 0, "current": 1})
    );
    let r = call(&app, "GET", "/api/session/nope", None).await;
    assert_eq!(r.status, StatusCode::NOT_FOUND);
    assert_eq!(r.json()["error"]["kind"], "unknown_session");
}

#[tokio::test]
async fn transcript_replays_to_the_current_state() {
    let app = app();
    let s = create(
        &app,
        json!({"family": "g2:3", "variant": "BA", "humanRole": "observer"}),
    )
    .await;
    let sid = id(&s);
    let mut last = s;
    while !last["state"]["terminal"].as_bool().unwrap() {
        last = call(&app, "POST", &format!("/api/session/{sid}/engine"), None)
            .await
            .json()["state"]
            .clone();
    }
    assert_eq!(last["state"]["colorsUsed"], 4);
    let r = call(&app, "GET", &format!("/api/session/{sid}/transcript"), None).await;
    assert_eq!(r.status, StatusCode::OK);
    let entries: Vec<TranscriptEntry> = r
        .text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let t = Transcript { entries };
    let g = Graph::from_graph6(last["graph6"].as_str().unwrap()).unwrap();
    let replayed = t.replay(&g, Variant::BA).unwrap();
    let colors: Vec<Value> = replayed
        .coloring()
        .iter()
        .enumerate()
        .map(|(v, c)| json!({"vertex": v, "color": c.unwrap()}))
        .collect();
    assert_eq!(last["state"]["colored"], Value::Array(colors));
    assert_eq!(r.counter, Some(t.moves().len() as u64));
    let eval = call(&app, "GET", &format!("/api/session/{sid}/eval"), None).await;
    assert_eq!(eval.json(), json!([]));
}

#[tokio::test]
async fn sessions_are_isolated() {
    let app = app();
    let a = id(&create(
        &app,
        json!({"family": "cycle:6", "variant": "B", "humanRole": "alice"}),
    )
    .await);
    let b = id(&create(
        &app,
        json!({"family": "cycle:6", "variant": "B", "humanRole": "alice"}),
    )
    .await);
    assert_ne!(a, b);
    call(&app, "POST", &format!("/api/session/{a}/engine"), None).await;
    let va = call(&app, "GET", &format!("/api/session/{a}"), None).await;
    let vb = call(&app, "GET", &format!("/api/session/{b}"), None).await;
    assert_eq!((va.counter, vb.counter), (Some(1), Some(0)));
    assert_eq!(vb.json()["state"]["uncolored"].as_array().unwrap().len(), 6);
}

#[tokio::test]
async fn family_endpoint_is_deterministic() {
    let app = app();
    let a = call(&app, "GET", "/api/families/path?n=4", None)
        .await
        .json();
    assert_eq!(a["graph6"], "Ch");
    assert_eq!(a["layout"].as_array().unwrap().len(), 4);
    assert_eq!(
        a,
        call(&app, "GET", "/api/families/path?n=4", None)
            .await
            .json()
    );
    let other = call(&app, "GET", "/api/families/path?n=4&layoutSeed=9", None)
        .await
        .json();
    assert_ne!(a["layout"], other["layout"]);
    let split = call(
        &app,
        "GET",
        "/api/families/split?clique=3&indep=2&cross=2&seed=4",
        None,
    )
    .await
    .json();
    assert_eq!(split["n"], 5);
    assert_eq!(split["labels"][0], "C0");
    let r = call(&app, "GET", "/api/families/path", None).await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);
    assert!(r.json()["error"]["message"]
        .as_str()
        .unwrap()
        .contains("`n`"));
}
