"""HTTP service: registration, questionnaire intake, personalized pages,
behavior-event ingestion, survey aggregation, and agent administration.

All ontology mutations funnel through the store's single writer; the event
log line for a behavior event is written inside the same critical section
so the logged accumulator always equals the stored one at that instant.
"""

from __future__ import annotations

import threading
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import Depends, FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from ..agents import (
    AgentPlatform,
    DEFAULT_MONITOR_PERIOD,
    MonitorAgent,
    SimulatedClock,
    WallClock,
    spawn_update_agent,
)
from ..fixtures import course_fixture
from ..ontology import (
    Name,
    NotFoundError,
    OntologyStore,
    list_module_resources,
    list_modules,
    read_profile,
    set_learner_name,
    write_profile,
)
from ..styles import (
    BehaviorEventKind,
    DIMENSIONS,
    LearnerStyleProfile,
    PresentationPlan,
    StyleValidationError,
    apply_event,
    compose_page,
    event_delta,
    score_ils,
)
from .accounts import AccountStore, DuplicateAccountError, AccountError, SessionStore, Session
from .eventlog import EventLog
from .survey import SurveyStore, SurveyValidationError

QUESTIONNAIRE_HINT = "no learning-style profile yet; submit the questionnaire at POST /ils"


class Engine:
    """Shared service state: store, agents, accounts, logs."""

    def __init__(self, data_dir: str | Path, *,
                 clock: SimulatedClock | WallClock | None = None,
                 monitor_period: float = DEFAULT_MONITOR_PERIOD,
                 admin_users: tuple[str, ...] = ("admin",),
                 session_ttl: float = 8 * 3600.0,
                 platform_name: str = "adaptalearn",
                 seed_course_fixture: bool = True):
        data_dir = Path(data_dir)
        self.clock = clock if clock is not None else WallClock()
        self.monitor_period = monitor_period
        self.store = OntologyStore(data_dir)
        if seed_course_fixture and not self.store.course_graph().triples:
            self.store.replace_course(course_fixture())
        self.platform = AgentPlatform(platform_name, self.clock)
        self.update_aid = spawn_update_agent(self.platform, self.store)
        self.accounts = AccountStore(data_dir / "accounts.tsv", admin_users)
        self.sessions = SessionStore(session_ttl)
        self.event_log = EventLog(data_dir / "events.log", self.clock)
        self.surveys = SurveyStore(data_dir / "surveys.jsonl")
        self.monitors: dict[str, MonitorAgent] = {}
        self._monitor_lock = threading.Lock()

    def ensure_monitor(self, user_id: str) -> MonitorAgent:
        with self._monitor_lock:
            monitor = self.monitors.get(user_id)
            if monitor is None:
                monitor = MonitorAgent(self.platform, self.store, self.update_aid,
                                       f"monitor-{user_id}", self.monitor_period)
                self.monitors[user_id] = monitor
            return monitor

    def start_session_flow(self, user_id: str) -> None:
        monitor = self.ensure_monitor(user_id)
        self.platform.gateway_send(monitor.aid, f"user_id={user_id}",
                                   conversation_id=f"session-{user_id}")
        self.platform.run_until_quiet()


class RegisterBody(BaseModel):
    name: str
    password: str


class LoginBody(BaseModel):
    name: str
    password: str


class IlsBody(BaseModel):
    answers: list[str]


class EventBody(BaseModel):
    kind: str


class SurveyBody(BaseModel):
    respondent_id: str = "anonymous"
    scores: list[int]


def _profile_json(profile: LearnerStyleProfile) -> dict:
    return {
        "user_id": profile.learner_id,
        "scores": {d.value: profile.scores[d] for d in DIMENSIONS},
        "accumulators": {d.value: profile.accumulators[d] for d in DIMENSIONS},
    }


def _plan_json(plan: PresentationPlan) -> dict:
    # offered toggles listed in canonical dimension order
    by_dim = {event_delta(k)[0]: k for k in plan.offered_toggles}
    return {
        "show_challenges": plan.show_challenges,
        "show_quizzes": plan.show_quizzes,
        "primary_medium": plan.primary_medium,
        "layout": plan.layout,
        "offered_toggles": [by_dim[d].value for d in DIMENSIONS],
    }


def _resource_included(kind: str, plan: PresentationPlan) -> bool:
    if kind == "challenge":
        return plan.show_challenges
    if kind == "quiz":
        return plan.show_quizzes
    if kind in ("video", "text"):
        return kind == plan.primary_medium
    return True


def create_app(data_dir: str | Path, *,
               clock: SimulatedClock | WallClock | None = None,
               monitor_period: float = DEFAULT_MONITOR_PERIOD,
               admin_users: tuple[str, ...] = ("admin",),
               session_ttl: float = 8 * 3600.0,
               pump_interval: float = 0.25,
               seed_course_fixture: bool = True) -> FastAPI:
    engine = Engine(data_dir, clock=clock, monitor_period=monitor_period,
                    admin_users=admin_users, session_ttl=session_ttl,
                    seed_course_fixture=seed_course_fixture)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        stop = threading.Event()
        pump_thread = None
        if not engine.clock.simulated:
            def pump_loop():
                while not stop.wait(pump_interval):
                    engine.platform.pump()
                    engine.platform.run_until_quiet()
            pump_thread = threading.Thread(target=pump_loop, daemon=True,
                                           name="agent-pump")
            pump_thread.start()
        try:
            yield
        finally:
            stop.set()
            if pump_thread is not None:
                pump_thread.join(timeout=2.0)

    app = FastAPI(title="adaptalearn", lifespan=lifespan)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.engine = engine

    def current_session(request: Request) -> Session:
        header = request.headers.get("Authorization", "")
        scheme, _, token = header.partition(" ")
        if scheme != "Bearer" or not token:
            raise HTTPException(401, "missing bearer token")
        session = engine.sessions.resolve(token)
        if session is None:
            raise HTTPException(401, "invalid or expired session")
        return session

    def admin_session(session: Session = Depends(current_session)) -> Session:
        if session.role != "admin":
            raise HTTPException(403, "admin scope required")
        return session

    def load_profile(user_id: str, missing_status: int) -> LearnerStyleProfile:
        try:
            return read_profile(engine.store.user_graph(), user_id)
        except NotFoundError:
            raise HTTPException(missing_status, QUESTIONNAIRE_HINT) from None

    @app.post("/register", status_code=201)
    def register(body: RegisterBody):
        try:
            account = engine.accounts.register(body.name, body.password)
        except DuplicateAccountError as exc:
            raise HTTPException(409, str(exc)) from None
        except AccountError as exc:
            raise HTTPException(422, str(exc)) from None
        return {"user_id": account.user_id}

    @app.post("/login")
    def login(body: LoginBody):
        account = engine.accounts.verify(body.name, body.password)
        if account is None:
            raise HTTPException(401, "invalid credentials")
        session = engine.sessions.create(account)
        engine.start_session_flow(account.user_id)
        return {"token": session.token, "user_id": session.user_id,
                "role": session.role, "expires_at": session.expires_at}

    @app.post("/ils")
    def submit_ils(body: IlsBody, session: Session = Depends(current_session)):
        try:
            scores = score_ils(body.answers)
        except StyleValidationError as exc:
            raise HTTPException(422, str(exc)) from None
        profile = LearnerStyleProfile.fresh(session.user_id, scores)
        account = engine.accounts.get(session.user_id)
        display = account.display_name if account else session.user_id

        def write(graph):
            graph = write_profile(graph, profile)
            return set_learner_name(graph, session.user_id, display), None
        engine.store.mutate_user(write)
        return {"scores": {d.value: scores[d] for d in DIMENSIONS}}

    @app.get("/profile")
    def get_profile(session: Session = Depends(current_session)):
        return _profile_json(load_profile(session.user_id, 404))

    @app.get("/modules")
    def get_modules(session: Session = Depends(current_session)):
        modules = list_modules(engine.store.course_graph())
        return {"modules": [
            {"id": module.local, "course": course.local if course else None}
            for module, course in modules
        ]}

    @app.get("/modules/{module_id}/page")
    def get_page(module_id: str, session: Session = Depends(current_session)):
        profile = load_profile(session.user_id, 409)
        plan = compose_page(profile)
        try:
            resources = list_module_resources(engine.store.course_graph(),
                                              Name("", module_id))
        except NotFoundError as exc:
            raise HTTPException(404, str(exc)) from None
        visible = [r for r in resources if _resource_included(r.kind, plan)]
        return {
            "module_id": module_id,
            "plan": _plan_json(plan),
            "resources": [
                {"title": r.name.local, "url": r.url, "kind": r.kind,
                 "order_index": r.order_index}
                for r in visible
            ],
        }

    @app.post("/events")
    def post_event(body: EventBody, session: Session = Depends(current_session)):
        try:
            kind = BehaviorEventKind(body.kind)
        except ValueError:
            raise HTTPException(422, f"unknown event kind {body.kind!r}") from None
        dimension, delta = event_delta(kind)
        with engine.store.lock:
            try:
                profile = read_profile(engine.store.user_graph(), session.user_id)
            except NotFoundError:
                raise HTTPException(409, QUESTIONNAIRE_HINT) from None
            updated = apply_event(profile, kind)
            engine.store.mutate_user(lambda graph: (write_profile(graph, updated), None))
            accumulator_after = updated.accumulators[dimension]
            engine.event_log.append(session.user_id, kind, dimension, delta,
                                    accumulator_after)
        return {"kind": kind.value, "dimension": dimension.value,
                "delta": delta, "accumulator_after": accumulator_after}

    @app.post("/survey", status_code=201)
    def post_survey(body: SurveyBody):
        try:
            count = engine.surveys.submit(body.respondent_id, body.scores)
        except SurveyValidationError as exc:
            raise HTTPException(422, str(exc)) from None
        return {"stored": True, "responses": count}

    @app.get("/survey/summary")
    def survey_summary():
        return {"summary": engine.surveys.summary(),
                "responses": engine.surveys.count()}

    @app.get("/admin/agents")
    def admin_agents(session: Session = Depends(admin_session)):
        return {"agents": [aid.guid for aid in engine.platform.agents()]}

    @app.get("/admin/trace")
    def admin_trace(session: Session = Depends(admin_session)):
        return PlainTextResponse(engine.platform.export_trace())

    return app
