"""HTTP surface: routes, error envelope, request ids, health, degraded mode."""

from __future__ import annotations

import urllib.parse

import pytest
from fastapi.testclient import TestClient

from resource_hub.service import ServiceConfig, create_app


@pytest.fixture()
def client(offline_config):
    return TestClient(create_app(offline_config))


def test_startup_refuses_missing_content_files(tmp_path):
    config = ServiceConfig(corpus_path=str(tmp_path / "missing.jsonl"),
                           event_log_path=str(tmp_path / "e.log"))
    with pytest.raises(Exception, match="missing content files"):
        create_app(config)


def test_chat_roundtrip_corpus_verbatim(client, corpus):
    session = client.post("/api/chat/session", json={"language": "en"}).json()
    response = client.post(f"/api/chat/{session['session_id']}/message",
                           json={"text": "What is a job interview like?"})
    assert response.status_code == 200
    body = response.json()
    assert body["source"] == "corpus-verbatim"
    assert body["matched_pair"] == "q-job-interview"
    assert body["text"] == next(p.answer for p in corpus.pairs if p.id == "q-job-interview")


def test_chat_miss_is_generated_by_mock(client):
    session = client.post("/api/chat/session", json={"language": "en"}).json()
    body = client.post(f"/api/chat/{session['session_id']}/message",
                       json={"text": "How can I prepare for a dishwashing job?"}).json()
    assert body["source"] == "generated"


def test_unsupported_language_is_400_with_envelope(client):
    response = client.post("/api/chat/session", json={"language": "de"})
    assert response.status_code == 400
    error = response.json()["error"]
    assert error["code"] == "invalid-input"
    assert error["request_id"]
    assert "de" in error["detail"]


def test_error_messages_localize_by_lang_param(client):
    english = client.post("/api/chat/session?lang=en", json={"language": "xx"}).json()
    spanish = client.post("/api/chat/session?lang=es", json={"language": "xx"}).json()
    arabic = client.post("/api/chat/session?lang=ar", json={"language": "xx"}).json()
    assert english["error"]["message"] != spanish["error"]["message"]
    assert arabic["error"]["message"] != spanish["error"]["message"]
    assert english["error"]["code"] == spanish["error"]["code"] == arabic["error"]["code"]


def test_every_response_carries_a_request_id(client):
    ok = client.get("/healthz")
    assert ok.headers["X-Request-ID"]
    bad = client.get("/api/faq?category=Nope&lang=en")
    assert bad.status_code == 404
    assert bad.headers["X-Request-ID"] == bad.json()["error"]["request_id"]


def test_faq_and_mindfulness_routes(client):
    entries = client.get("/api/faq", params={"category": "FitBit", "lang": "es"}).json()["entries"]
    assert entries and all("question" in e and "answer" in e for e in entries)
    items = client.get("/api/mindfulness", params={
        "section": "Connecting with Nature", "lang": "en"}).json()["items"]
    assert any(i["kind"] == "embedded-video" for i in items)


def test_phrases_and_translate_routes(client):
    rows = client.get("/api/phrases", params={"category": "Greetings", "lang": "ar"}).json()
    assert len(rows["phrases"]) == 3
    translated = client.post("/api/translate",
                             json={"source_lang": "es", "text": "hola"}).json()
    assert translated["text"] == "hello"
    too_long = client.post("/api/translate",
                           json={"source_lang": "fr", "text": "x" * 2001})
    assert too_long.status_code == 400


def test_locator_route(client):
    body = client.get("/api/locator", params={"category": "food pantries"}).json()
    query = urllib.parse.parse_qs(urllib.parse.urlparse(body["embed_url"]).query)
    assert query["q"] == ["food pantry near me"]
    assert client.get("/api/locator", params={"category": "nothing"}).status_code == 404


def test_career_routes_serve_fixtures(client):
    occupations = client.get("/api/career/occupations").json()["occupations"]
    assert len(occupations) == 50
    # same path with parameters is the "Occupations" query kind, not the catalog
    profile = client.get("/api/career/occupations",
                         params={"occupation": "15-1252.00", "state": "IL"}).json()
    assert profile["kind"] == "occupations" and profile["rows"]
    response = client.get("/api/career/unemployment", params={"state": "IL"})
    assert response.status_code == 200
    table = response.json()
    assert table["columns"] and table["rows"]
    # display-name resolution through the catalog
    by_name = client.get("/api/career/certifications",
                         params={"occupation": "Dental Hygienists"})
    assert by_name.status_code == 200
    missing = client.get("/api/career/skills-gaps", params={"occupation": "15-1252.00"})
    assert missing.status_code == 400


def test_resume_build_returns_pdf_download(client):
    payload = {"personal": {"name": "Rosa Ibarra", "location": "Chicago, IL"},
               "skills": ["Customer service"]}
    response = client.post("/api/resume/build", json=payload)
    assert response.status_code == 200
    assert response.headers["content-type"] == "application/pdf"
    assert "attachment" in response.headers["content-disposition"]
    assert response.content.startswith(b"%PDF-")


def test_resume_review_roundtrip(client):
    pdf = client.post("/api/resume/build",
                      json={"personal": {"name": "Rosa Ibarra"}}).content
    report = client.post("/api/resume/review", content=pdf,
                         headers={"Content-Type": "application/pdf"}).json()
    assert report["strengths"] and report["improvements"]
    broken = client.post("/api/resume/review", content=b"not a pdf")
    assert broken.status_code == 400


def test_interview_flow(client):
    questions = client.get("/api/interview/questions").json()["questions"]
    assert {q["id"] for q in questions} >= {"tell-me-about-yourself", "salary-expectations"}
    session = client.post("/api/interview/session",
                          json={"question_id": "tell-me-about-yourself"}).json()
    turn = client.post(f"/api/interview/{session['session_id']}/turn",
                       json={"transcript": "I am a line cook with five years experience."}).json()
    assert turn["feedback"]["clarity"]
    ended = client.post(f"/api/interview/{session['session_id']}/end").json()
    assert ended["state"] == "ended"
    again = client.post(f"/api/interview/{session['session_id']}/end")
    assert again.status_code == 409


def test_metrics_event_and_report(client):
    sid = client.post("/api/metrics/session").json()["session_id"]
    ok = client.post("/api/metrics/event",
                     json={"session_id": sid, "kind": "tab_opened", "target": "locator"})
    assert ok.status_code == 200
    classified = client.post("/api/metrics/event", json={
        "session_id": sid, "kind": "question_submitted",
        "text": "help me write my resume objective"}).json()
    assert classified["target"] == "resume-cv-creation"
    rejected = client.post("/api/metrics/event", json={
        "session_id": sid, "kind": "tab_opened", "target": "locator", "ip": "1.2.3.4"})
    assert rejected.status_code == 400
    report = client.get("/api/metrics/report").json()
    assert report["tab_counts"]["locator"] == 1
    assert report["question_count"] == 1
    assert "Key results" in report["text"]


def test_audio_play_targets_are_validated_against_the_bank(client):
    sid = client.post("/api/metrics/session").json()["session_id"]
    ok = client.post("/api/metrics/event", json={
        "session_id": sid, "kind": "audio_played", "target": "common-hello:es"})
    assert ok.status_code == 200
    unknown = client.post("/api/metrics/event", json={
        "session_id": sid, "kind": "audio_played", "target": "not-a-phrase:es"})
    assert unknown.status_code == 400


def test_healthz_reports_components(client):
    body = client.get("/healthz").json()
    assert body["status"] == "up"
    assert body["components"]["chat"] == "ok"
    assert body["components"]["content"] == "ok"


def test_missing_credentials_degrade_without_blocking(tmp_path, monkeypatch):
    monkeypatch.delenv("CHAT_PROVIDER_API_KEY", raising=False)
    monkeypatch.delenv("TRANSLATE_PROVIDER_API_KEY", raising=False)
    config = ServiceConfig(event_log_path=str(tmp_path / "e.log"))
    client = TestClient(create_app(config))

    health = client.get("/healthz").json()
    assert health["status"] == "up"
    assert health["components"]["chat"] == "degraded"

    # corpus hits still work with no provider at all
    session = client.post("/api/chat/session", json={"language": "en"}).json()
    hit = client.post(f"/api/chat/{session['session_id']}/message",
                      json={"text": "What is a job interview like?"}).json()
    assert hit["source"] == "corpus-verbatim"
    # misses degrade but the session stays consistent
    miss = client.post(f"/api/chat/{session['session_id']}/message",
                       json={"text": "Something the corpus does not cover"}).json()
    assert miss["source"] == "degraded"

    translate = client.post("/api/translate", json={"source_lang": "es", "text": "hola"})
    assert translate.status_code == 503
    career = client.get("/api/career/unemployment", params={"state": "IL"})
    assert career.status_code == 503
