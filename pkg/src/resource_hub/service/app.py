"""HTTP surface: one route per capability, uniform errors, request ids.

All handlers are thin: validation and behavior live in the feature modules;
this layer wires configuration, providers, and the error envelope. With
--offline-fixtures every provider is a deterministic mock and the whole
surface works with no network and no credentials.
"""

from __future__ import annotations

import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .. import content as content_mod
from .. import qa, translator
from ..assistant import Assistant, InstructionProfileSet, PROFILE_VERSIONS
from ..careers import (
    DatasetCache,
    FixtureCareerClient,
    HttpCareerClient,
    KIND_SLUGS,
    OccupationCatalog,
    fetch,
)
from ..careers.catalog import ONET_CODE_RE
from ..careers.queries import KIND_SPECS
from ..errors import HubError, NotFoundError, ProviderUnavailableError
from ..metrics import EventLog, RuleTable, TargetVocabulary, aggregate_lines, new_session_id, render_report
from ..metrics.classify import category_slug
from ..providers import (
    CannedChatProvider,
    HttpChatProvider,
    HttpTranslationProvider,
    MockChatProvider,
    RecordedTranslationProvider,
)
from ..resume import (
    BuiltinRenderEngine,
    InterviewCenter,
    ResumeInput,
    SubprocessRenderEngine,
    build_resume,
    load_question_bank,
    review_resume,
)
from ..langs import SUPPORTED_LANGUAGES
from .config import ServiceConfig
from .envelope import envelope

OFFLINE_REVIEW_REPLY = (
    "Strengths:\n"
    "- Your work history is presented in a steady, easy-to-follow order.\n"
    "- Contact information is complete and easy to find.\n"
    "Weaknesses:\n"
    "- Several bullet points describe duties rather than accomplishments.\n"
    "Improvements:\n"
    "- Start each bullet with an action verb and add a concrete result.\n"
    "- List two or three skills that match the jobs you are applying for.\n"
)

OFFLINE_FEEDBACK_REPLY = (
    "Clarity: Your answer was easy to follow; slow down slightly when giving examples.\n"
    "Confidence: You sounded steady and prepared; open with your strongest point.\n"
    "Completeness: Good coverage of the question; add one concrete example next time.\n"
)


class _UnconfiguredChatProvider:
    """Stands in when no chat credential is configured; every call degrades."""

    def send(self, model_id, instructions, grounding, messages):
        raise ProviderUnavailableError("chat provider credential is not configured")


class _UnconfiguredTranslationProvider:
    def translate(self, source_lang, text):
        raise ProviderUnavailableError("translation provider is not configured")


class _UnconfiguredCareerClient:
    def fetch_table(self, descriptor):
        raise ProviderUnavailableError("career-data provider is not configured")


class SessionBody(BaseModel):
    language: str = "en"


class MessageBody(BaseModel):
    text: str


class ProfileBody(BaseModel):
    version: str


class TranslateBody(BaseModel):
    source_lang: str
    text: str


class InterviewStartBody(BaseModel):
    question_id: str


class TurnBody(BaseModel):
    transcript: str


def _build_vocabulary(config: ServiceConfig, bank: translator.PhraseBank) -> TargetVocabulary:
    vocab = TargetVocabulary.load(config.metrics_vocab_path)
    audio_targets = {
        f"{entry.phrase_id}:{lang}" for entry in bank.entries for lang in SUPPORTED_LANGUAGES
    }
    return vocab.extended("audio_played", audio_targets)


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    config.require_content_files()

    corpus = qa.load_corpus(config.corpus_path)
    profiles = InstructionProfileSet.load(config.profiles_path)
    bank = translator.load_phrase_bank(config.phrase_bank_path)
    store = content_mod.load_content(config.faq_path, config.mindfulness_path)
    catalog = OccupationCatalog.load(config.occupations_path)
    rules = RuleTable.load(config.classifier_rules_path)
    question_bank = load_question_bank(config.interview_questions_path)
    event_log = EventLog(config.event_log_path, _build_vocabulary(config, bank))

    if config.offline_fixtures:
        chat_provider = MockChatProvider()
        review_provider = CannedChatProvider(OFFLINE_REVIEW_REPLY)
        interview_provider = CannedChatProvider(OFFLINE_FEEDBACK_REPLY)
        translation_provider = RecordedTranslationProvider(fixture_path=config.translation_fixture_path)
        career_client = FixtureCareerClient(config.career_fixture_dir)
    else:
        statuses = config.provider_status()
        if statuses["chat"] == "ok":
            chat_provider = review_provider = interview_provider = HttpChatProvider(config.chat_base_url)
        else:
            chat_provider = review_provider = interview_provider = _UnconfiguredChatProvider()
        translation_provider = (
            HttpTranslationProvider(config.translate_base_url)
            if statuses["translation"] == "ok" else _UnconfiguredTranslationProvider()
        )
        career_client = (
            HttpCareerClient(config.career_base_url)
            if statuses["career-data"] == "ok" else _UnconfiguredCareerClient()
        )

    assistant = Assistant(
        corpus=corpus, provider=chat_provider, profiles=profiles,
        threshold=config.match_threshold, model_id=config.model_id,
    )
    interviews = InterviewCenter(question_bank, interview_provider, model_id=config.model_id)
    career_cache = DatasetCache(ttl_seconds=config.cache_ttl_seconds)
    render_engine = (
        BuiltinRenderEngine() if config.render_engine == "builtin"
        else SubprocessRenderEngine(config.render_engine)
    )
    render_limiter = threading.BoundedSemaphore(max(1, config.render_concurrency))

    app = FastAPI(title="resource-hub", version="0.1.0")
    app.state.config = config
    app.state.assistant = assistant
    app.state.event_log = event_log
    app.state.career_client = career_client

    def _lang(request: Request) -> str:
        lang = request.query_params.get("lang", "en")
        return lang if lang in SUPPORTED_LANGUAGES else "en"

    @app.middleware("http")
    async def request_id_middleware(request: Request, call_next):
        request.state.request_id = uuid.uuid4().hex
        response = await call_next(request)
        response.headers["X-Request-ID"] = request.state.request_id
        return response

    @app.exception_handler(HubError)
    async def hub_error_handler(request: Request, exc: HubError):
        request_id = getattr(request.state, "request_id", "")
        body = envelope(exc, exc.http_status, str(exc), _lang(request), request_id)
        return JSONResponse(status_code=exc.http_status, content=body,
                            headers={"X-Request-ID": request_id})

    # -- assistant ---------------------------------------------------------

    @app.post("/api/chat/session")
    def chat_session(body: SessionBody):
        session = assistant.create_session(body.language)
        return {"session_id": session.session_id, "language": session.language_pref,
                "profile": session.profile}

    @app.post("/api/chat/{session_id}/message")
    def chat_message(session_id: str, body: MessageBody):
        reply = assistant.handle_message(session_id, body.text)
        return {"text": reply.text, "source": reply.source, "matched_pair": reply.matched_pair}

    @app.post("/api/chat/{session_id}/profile")
    def chat_profile(session_id: str, body: ProfileBody):
        session = assistant.set_profile(session_id, body.version)
        return {"session_id": session.session_id, "profile": session.profile,
                "known_versions": list(PROFILE_VERSIONS)}

    # -- content -----------------------------------------------------------

    @app.get("/api/faq")
    def faq(category: str, lang: str = "en"):
        return {"entries": content_mod.list_faq(store, category, lang)}

    @app.get("/api/mindfulness")
    def mindfulness(section: str, lang: str = "en"):
        return {"items": content_mod.list_mindfulness(store, section, lang)}

    @app.get("/api/locator")
    def locator(category: str):
        return {"category": category,
                "embed_url": content_mod.locator_query(category, config.map_embed_base)}

    # -- translator ----------------------------------------------------------

    @app.get("/api/phrases")
    def phrases(category: str, lang: str = "en"):
        rows = translator.get_phrases(bank, category, lang)
        return {"phrases": [
            {"id": pid, "text": text, "audio": audio} for pid, text, audio in rows
        ]}

    @app.get("/api/phrases/categories")
    def phrase_categories():
        return {"categories": list(bank.categories)}

    @app.post("/api/translate")
    def translate(body: TranslateBody):
        request_obj = translator.validate_translation_request(body.source_lang, body.text)
        return {"text": translator.translate_to_english(request_obj, translation_provider)}

    # -- career services -----------------------------------------------------

    def _career_dataset(kind_slug: str, request: Request) -> dict:
        kind = KIND_SLUGS[kind_slug]
        params = {k: v for k, v in request.query_params.items() if k != "lang"}
        for key in ("occupation", "occupation_2"):
            value = params.get(key)
            if value and not ONET_CODE_RE.fullmatch(value):
                params[key] = catalog.resolve(value)
        dataset = fetch(kind, params, app.state.career_client, career_cache)
        return {"kind": dataset.kind, "columns": list(dataset.columns),
                "rows": [list(row) for row in dataset.rows],
                "fetched_at": dataset.fetched_at}

    @app.get("/api/career/occupations")
    def occupations(request: Request):
        # bare: the curated catalog; with parameters: the "Occupations"
        # query kind (same path segment, the catalog takes no parameters)
        if {k for k in request.query_params if k != "lang"}:
            return _career_dataset("occupations", request)
        return {"occupations": [
            {"name": e.display_name, "code": e.onet_code} for e in catalog.entries
        ]}

    @app.get("/api/career/kinds")
    def career_kinds():
        kinds = []
        for name, spec in KIND_SPECS.items():
            signature = spec["signature"]
            params = list(signature) if signature != "location" else ["city|zip|state", "radius?"]
            kinds.append({"name": name, "slug": spec["slug"], "params": params})
        return {"kinds": kinds}

    @app.get("/api/career/{kind_slug}")
    def career_query(kind_slug: str, request: Request):
        if kind_slug not in KIND_SLUGS:
            raise NotFoundError(f"unknown career query kind {kind_slug!r}")
        return _career_dataset(kind_slug, request)

    # -- resume center ---------------------------------------------------------

    @app.post("/api/resume/build")
    async def resume_build(request: Request):
        payload = await request.json()
        resume = ResumeInput.from_dict(payload)
        pdf = build_resume(resume, render_engine, limiter=render_limiter)
        return Response(
            content=pdf, media_type="application/pdf",
            headers={"Content-Disposition": 'attachment; filename="resume.pdf"'},
        )

    @app.post("/api/resume/review")
    async def resume_review(request: Request):
        pdf = await request.body()
        report = review_resume(pdf, review_provider, model_id=config.model_id)
        return {"strengths": list(report.strengths),
                "weaknesses": list(report.weaknesses),
                "improvements": list(report.improvements)}

    # -- interview practice ------------------------------------------------------

    @app.get("/api/interview/questions")
    def interview_questions():
        return {"questions": [{"id": qid, "text": text} for qid, text in question_bank.items()]}

    @app.post("/api/interview/session")
    def interview_start(body: InterviewStartBody):
        session = interviews.start_interview(body.question_id)
        return {"session_id": session.session_id, "question_id": session.question_id,
                "question": session.question_text, "state": session.state}

    @app.post("/api/interview/{session_id}/turn")
    def interview_turn(session_id: str, body: TurnBody):
        feedback = interviews.submit_turn(session_id, body.transcript)
        session = interviews.get_session(session_id)
        return {"turn": len(session.turns),
                "feedback": {"clarity": feedback.clarity, "confidence": feedback.confidence,
                             "completeness": feedback.completeness,
                             "available": feedback.available}}

    @app.post("/api/interview/{session_id}/end")
    def interview_end(session_id: str):
        summary = interviews.end_interview(session_id)
        session = interviews.get_session(session_id)
        return {"state": session.state, "turns": len(session.turns), "summary": summary}

    # -- metrics -------------------------------------------------------------------

    @app.post("/api/metrics/session")
    def metrics_session():
        return {"session_id": new_session_id()}

    @app.post("/api/metrics/event")
    async def metrics_event(request: Request):
        payload = await request.json()
        if isinstance(payload, dict) and payload.get("kind") == "question_submitted" \
                and "text" in payload:
            # classify client-side question text into its closed label; the
            # free text itself is never stored
            text = payload.pop("text")
            payload["target"] = category_slug(rules.classify(text))
        event = event_log.record(payload)
        return {"recorded": True, "kind": event.kind, "target": event.target}

    @app.get("/api/metrics/report")
    def metrics_report():
        report = aggregate_lines(event_log.lines())
        return {
            "session_count": report.session_count,
            "question_count": report.question_count,
            "resume_generated_count": report.resume_generated_count,
            "audio_play_count": report.audio_play_count,
            "tab_counts": report.tab_counts,
            "question_category_counts": report.question_category_counts,
            "career_panel_counts": report.career_panel_counts,
            "skipped_lines": report.skipped_lines,
            "text": render_report(report),
        }

    # -- health ---------------------------------------------------------------------

    @app.get("/healthz")
    def healthz():
        components = dict(config.provider_status())
        components["content"] = "ok"
        if config.render_engine == "builtin":
            components["render-engine"] = "ok"
        else:
            components["render-engine"] = (
                "ok" if Path(config.render_engine).exists() else "degraded"
            )
        return {"status": "up", "components": components}

    if config.audio_dir and Path(config.audio_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/static/audio", StaticFiles(directory=config.audio_dir), name="audio")

    if config.ui_dir and Path(config.ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
