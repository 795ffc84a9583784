//! axum routes over [`AppState`].

use std::net::SocketAddr;

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use super::queries::{
    self, DistributionQuery, FQuery, GrundyQuery, PeriodScanQuery, RowQuery, StatusQuery,
    TableQuery,
};
use super::{AppState, LabeledMove, ServiceError};

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let status =
            StatusCode::from_u16(self.http_status()).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self.body())).into_response()
    }
}

type Reply<T> = Result<Json<T>, ServiceError>;

fn query<T: DeserializeOwned>(q: Result<Query<T>, QueryRejection>) -> Result<T, ServiceError> {
    q.map(|Query(v)| v)
        .map_err(|e| ServiceError::BadRequest(e.body_text()))
}

fn body<T: DeserializeOwned>(b: Result<Json<T>, JsonRejection>) -> Result<T, ServiceError> {
    b.map(|Json(v)| v)
        .map_err(|e| ServiceError::BadRequest(e.body_text()))
}

#[derive(Debug, Deserialize)]
struct CreateGame {
    piles: [u64; 3],
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/games", post(create_game))
        .route("/api/games/{id}", get(get_game).delete(delete_game))
        .route("/api/games/{id}/moves", post(submit_move))
        .route("/api/games/{id}/engine-move", post(engine_move))
        .route("/api/analysis/status", get(status))
        .route("/api/analysis/grundy", get(grundy))
        .route("/api/analysis/table", get(table))
        .route("/api/analysis/row", get(row))
        .route("/api/analysis/f", get(f_values))
        .route("/api/analysis/period-scan", get(period_scan))
        .route("/api/analysis/distribution", get(distribution))
        .fallback(|| async { ServiceError::NotFound("no such route".into()) })
        .with_state(state)
}

async fn create_game(
    State(s): State<AppState>,
    b: Result<Json<CreateGame>, JsonRejection>,
) -> Result<(StatusCode, Json<super::GameSession>), ServiceError> {
    let req = body(b)?;
    Ok((StatusCode::CREATED, Json(s.store.create(req.piles))))
}

async fn get_game(State(s): State<AppState>, Path(id): Path<String>) -> Reply<super::GameSession> {
    s.store.get(&id).map(Json)
}

async fn delete_game(
    State(s): State<AppState>,
    Path(id): Path<String>,
) -> Result<StatusCode, ServiceError> {
    s.store.delete(&id).map(|()| StatusCode::NO_CONTENT)
}

async fn submit_move(
    State(s): State<AppState>,
    Path(id): Path<String>,
    b: Result<Json<LabeledMove>, JsonRejection>,
) -> Reply<super::GameSession> {
    let mv = body(b)?;
    s.store.submit_move(&id, mv).map(Json)
}

async fn engine_move(
    State(s): State<AppState>,
    Path(id): Path<String>,
) -> Reply<super::GameSession> {
    s.store.engine_move(&id).map(Json)
}

async fn status(q: Result<Query<StatusQuery>, QueryRejection>) -> Reply<queries::StatusReply> {
    Ok(Json(queries::position_status(query(q)?)))
}

async fn grundy(
    State(s): State<AppState>,
    q: Result<Query<GrundyQuery>, QueryRejection>,
) -> Reply<queries::GrundyReply> {
    queries::grundy(query(q)?, &s.table).map(Json)
}

async fn table(
    State(s): State<AppState>,
    q: Result<Query<TableQuery>, QueryRejection>,
) -> Reply<crate::analysis::TableDocument> {
    queries::table_slice(query(q)?, &s.table).map(Json)
}

async fn row(
    State(s): State<AppState>,
    q: Result<Query<RowQuery>, QueryRejection>,
) -> Reply<queries::RowReply> {
    queries::row(query(q)?, &s.table).map(Json)
}

async fn f_values(
    State(s): State<AppState>,
    q: Result<Query<FQuery>, QueryRejection>,
) -> Reply<queries::FReply> {
    queries::f_values(query(q)?, &s.config).map(Json)
}

async fn period_scan(
    State(s): State<AppState>,
    q: Result<Query<PeriodScanQuery>, QueryRejection>,
) -> Reply<queries::PeriodScanReply> {
    queries::period(query(q)?, &s.table, &s.config).map(Json)
}

async fn distribution(
    State(s): State<AppState>,
    q: Result<Query<DistributionQuery>, QueryRejection>,
) -> Reply<crate::analysis::DistributionReport> {
    queries::distribution(query(q)?, &s.table).map(Json)
}

/// Serves until Ctrl-C, then writes the session snapshot if one is configured.
pub async fn serve(state: AppState, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!(addr = %listener.local_addr()?, "listening");
    axum::serve(listener, router(state.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
            tracing::info!("shutting down");
        })
        .await?;
    state.save_snapshot()?;
    if let Some(path) = &state.config.snapshot {
        tracing::info!(path = %path.display(), sessions = state.store.len(), "snapshot written");
    }
    Ok(())
}
