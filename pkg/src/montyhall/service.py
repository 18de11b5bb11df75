"""HTTP service for live play sessions and solver queries.

A session runs the four-move show against a configured host mixture: the
server samples the host's pure strategy (kept secret until the round is
finished), the human picks a door, sees the reveal, asks for advice if
they want it, and commits to Switch or Notswitch.  The host never adapts
to the player's history: every round draws a fresh independent pure
strategy from the declared mixture.

Errors: 404 unknown session, 409 action out of turn, 422 invalid input.
Rationals travel as "p/q" strings.
"""

from __future__ import annotations

import random
import threading
import uuid
from dataclasses import dataclass, field
from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .game import (
    DOORS,
    HOST_STRATEGIES,
    Action,
    HostPureStrategy,
    Playout,
    Side,
    door_on_side,
    reveal_for,
)
from .matrices import (
    Bimatrix,
    PayoffMatrix,
    build_contestant_matrix,
    get_bimatrix_fixture,
    get_matrix_fixture,
)
from .nash import best_response, classify_equilibrium_response, mixed_nash, pure_nash
from .simulate import ExactSampler
from .strategies import (
    MixedStrategy,
    car_marginal,
    host_from_pi_lambda,
    parse_rational,
    parse_strategy,
)
from .zerosum import solve

GUARANTEED_VALUE = Fraction(2, 3)


def _parse_host_config(
    host: str | None, pi: list[str] | None, lam: list[str] | None
) -> MixedStrategy:
    if host is not None and pi is not None:
        raise HTTPException(422, "give either a named host mixture or pi/lambda")
    try:
        if host is not None:
            return parse_strategy(host, "host")
        if pi is not None:
            lam_values = (
                tuple(parse_rational(x) for x in lam)
                if lam
                else (Fraction(1, 2),) * 3
            )
            return host_from_pi_lambda(tuple(parse_rational(x) for x in pi), lam_values)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(422, str(exc))
    raise HTTPException(422, "host configuration is required")


@dataclass
class RoundRecord:
    playout: Playout
    action: Action


@dataclass
class Session:
    id: str
    host_config: MixedStrategy
    advice_mode: str
    rng_seed: int
    sampler: ExactSampler
    lock: threading.Lock = field(default_factory=threading.Lock)
    state: str = "awaiting_pick"
    hidden: HostPureStrategy | None = None
    pick: int | None = None
    revealed: int | None = None
    revealed_side: Side | None = None
    history: list[RoundRecord] = field(default_factory=list)

    def public_view(self) -> dict:
        # Never leaks the hidden pure strategy or the car door.
        return {
            "session_id": self.id,
            "state": self.state,
            "rounds_played": len(self.history),
            "pick": self.pick,
            "revealed": self.revealed,
            "revealed_side": None if self.revealed_side is None else self.revealed_side.value,
        }


class SessionStore:
    def __init__(self, base_seed: int | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._base_seed = base_seed
        self._counter = 0

    def create(
        self,
        host_config: MixedStrategy,
        advice_mode: str = "declared",
        seed: int | None = None,
    ) -> Session:
        with self._lock:
            self._counter += 1
            if seed is None:
                if self._base_seed is not None:
                    seed = self._base_seed + self._counter
                else:
                    seed = random.SystemRandom().getrandbits(48)
            session_id = uuid.uuid4().hex[:16]
            sampler = ExactSampler(
                host_config, random.Random(f"{seed}/session-host")
            )
            session = Session(
                id=session_id,
                host_config=host_config,
                advice_mode=advice_mode,
                rng_seed=seed,
                sampler=sampler,
            )
            session.hidden = HOST_STRATEGIES[sampler.draw()]
            self._sessions[session_id] = session
            return session

    def get(self, session_id: str) -> Session:
        session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id}")
        return session

    def all_sessions(self) -> list[Session]:
        with self._lock:
            return list(self._sessions.values())

    def snapshot(self) -> dict:
        """JSON export of the in-memory state (public views plus configs)."""
        return {
            "sessions": [
                {
                    **s.public_view(),
                    "host_config": s.host_config.to_json_dict(),
                    "advice_mode": s.advice_mode,
                    "history": [
                        {"playout": r.playout.to_json_dict(), "action": r.action.name}
                        for r in s.history
                    ],
                }
                for s in self.all_sessions()
            ]
        }


def submit_pick(session: Session, door: int) -> dict:
    if door not in DOORS:
        raise HTTPException(422, f"door must be 1, 2 or 3, got {door}")
    with session.lock:
        if session.state == "awaiting_final":
            raise HTTPException(409, "a pick was already made; submit the final action")
        if session.state == "finished":
            # New round: a fresh independent host draw.
            session.hidden = HOST_STRATEGIES[session.sampler.draw()]
            session.state = "awaiting_pick"
        revealed, side = reveal_for(session.hidden, door)
        session.pick = door
        session.revealed = revealed
        session.revealed_side = side
        session.state = "awaiting_final"
        return session.public_view()


def submit_final(session: Session, action: Action) -> dict:
    with session.lock:
        if session.state != "awaiting_final":
            raise HTTPException(409, "no pick to resolve; submit a pick first")
        pick, revealed = session.pick, session.revealed
        if action is Action.SWITCH:
            (final,) = [d for d in DOORS if d not in (pick, revealed)]
        else:
            final = pick
        playout = Playout(
            car_door=session.hidden.car_door,
            pick=pick,
            revealed=revealed,
            revealed_side=session.revealed_side,
            final_choice=final,
            contestant_wins=final == session.hidden.car_door,
        )
        session.history.append(RoundRecord(playout, action))
        session.state = "finished"
        session.pick = None
        session.revealed = None
        session.revealed_side = None
        return {
            "session_id": session.id,
            "state": session.state,
            "rounds_played": len(session.history),
            "playout": playout.to_json_dict(),
        }


def conditional_win_probabilities(
    host_config: MixedStrategy, pick: int, revealed: int
) -> tuple[Fraction, Fraction]:
    """Exact (switch, stay) win odds given the observed pick and reveal.

    Conditions the declared mixture on the host pure strategies that are
    consistent with the observation: on a match the revealed side must be
    the preferred one, on a mismatch the reveal is forced, so exactly
    three pure strategies remain possible.
    """
    stay_weight = Fraction(0)
    switch_weight = Fraction(0)
    for strategy, prob in zip(HOST_STRATEGIES, host_config.probs):
        if prob == 0:
            continue
        if strategy.car_door == pick:
            if door_on_side(pick, strategy.match_reveal) == revealed:
                stay_weight += prob
        elif strategy.car_door != revealed:
            switch_weight += prob
    total = stay_weight + switch_weight
    if total == 0:
        raise HTTPException(409, "observation impossible under the declared mixture")
    return switch_weight / total, stay_weight / total


def get_advice(session: Session) -> dict:
    with session.lock:
        if session.state != "awaiting_final":
            raise HTTPException(409, "advice is available once a door is revealed")
        if session.advice_mode == "hidden":
            # The host mixture is not disclosed: report the guarantee of
            # uniform always-switch play, the game value.
            return {
                "recommended_action": "Switch",
                "exact_win_prob_if_switch": str(GUARANTEED_VALUE),
                "exact_win_prob_if_stay": str(1 - GUARANTEED_VALUE),
                "guarantee_only": True,
            }
        switch_p, stay_p = conditional_win_probabilities(
            session.host_config, session.pick, session.revealed
        )
        if switch_p > stay_p:
            recommendation = "Switch"
        elif stay_p > switch_p:
            recommendation = "Notswitch"
        else:
            recommendation = "either"
        return {
            "recommended_action": recommendation,
            "exact_win_prob_if_switch": str(switch_p),
            "exact_win_prob_if_stay": str(stay_p),
            "guarantee_only": False,
        }


def _stats_for(records: list[RoundRecord], pi) -> dict:
    by_action = {}
    for name, action in (("Switch", Action.SWITCH), ("Notswitch", Action.NOTSWITCH)):
        rounds = [r for r in records if r.action is action]
        wins = sum(1 for r in rounds if r.playout.contestant_wins)
        if rounds:
            empirical = Fraction(wins, len(rounds))
            # Per-round exact reference: switching wins exactly when the
            # car is not behind the pick, staying when it is.
            refs = [
                (1 - pi[r.playout.pick - 1])
                if action is Action.SWITCH
                else pi[r.playout.pick - 1]
                for r in rounds
            ]
            reference = sum(refs, Fraction(0)) / len(refs)
            by_action[name] = {
                "rounds": len(rounds),
                "wins": wins,
                "empirical_rate": str(empirical),
                "exact_reference": str(reference),
            }
        else:
            by_action[name] = {
                "rounds": 0,
                "wins": 0,
                "empirical_rate": None,
                "exact_reference": None,
            }
    return {
        "rounds": len(records),
        "wins": sum(1 for r in records if r.playout.contestant_wins),
        "by_action": by_action,
    }


def get_stats(session: Session) -> dict:
    with session.lock:
        return _stats_for(session.history, car_marginal(session.host_config))


class CreateSessionBody(BaseModel):
    host: str | None = None
    pi: list[str] | None = None
    lam: list[str] | None = Field(default=None, alias="lambda")
    seed: int | None = None
    advice_mode: str = "declared"

    model_config = {"populate_by_name": True}


class PickBody(BaseModel):
    door: int


class FinalBody(BaseModel):
    action: str


class SolveBody(BaseModel):
    fixture: str | None = None
    matrix: dict | None = None


class BestResponseBody(BaseModel):
    host: str | None = None
    pi: list[str] | None = None
    lam: list[str] | None = Field(default=None, alias="lambda")

    model_config = {"populate_by_name": True}


class NashBody(BaseModel):
    fixture: str | None = None
    bimatrix: dict | None = None
    mode: str = "both"


def _parse_action(text: str) -> Action:
    normalized = text.strip().lower()
    if normalized in ("s", "switch"):
        return Action.SWITCH
    if normalized in ("n", "notswitch", "stay"):
        return Action.NOTSWITCH
    raise HTTPException(422, f"action must be Switch or Notswitch, got {text!r}")


def create_app(frontend_dir: str | None = None, base_seed: int | None = None) -> FastAPI:
    app = FastAPI(title="montyhall", version="0.1.0")
    store = SessionStore(base_seed=base_seed)
    app.state.store = store

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        if body.advice_mode not in ("declared", "hidden"):
            raise HTTPException(422, "advice_mode must be 'declared' or 'hidden'")
        config = _parse_host_config(body.host, body.pi, body.lam)
        session = store.create(config, body.advice_mode, body.seed)
        return session.public_view()

    @app.get("/sessions/{session_id}")
    def session_view(session_id: str):
        return store.get(session_id).public_view()

    @app.post("/sessions/{session_id}/pick")
    def pick(session_id: str, body: PickBody):
        return submit_pick(store.get(session_id), body.door)

    @app.post("/sessions/{session_id}/final")
    def final(session_id: str, body: FinalBody):
        return submit_final(store.get(session_id), _parse_action(body.action))

    @app.get("/sessions/{session_id}/advice")
    def advice(session_id: str):
        return get_advice(store.get(session_id))

    @app.get("/sessions/{session_id}/stats")
    def stats(session_id: str):
        return get_stats(store.get(session_id))

    @app.get("/stats")
    def aggregate_stats():
        records: list[RoundRecord] = []
        weighted: list[tuple[RoundRecord, tuple]] = []
        for session in store.all_sessions():
            with session.lock:
                pi = car_marginal(session.host_config)
                for r in session.history:
                    records.append(r)
                    weighted.append((r, pi))
        by_action = {}
        for name, action in (
            ("Switch", Action.SWITCH),
            ("Notswitch", Action.NOTSWITCH),
        ):
            rounds = [(r, pi) for r, pi in weighted if r.action is action]
            wins = sum(1 for r, _ in rounds if r.playout.contestant_wins)
            if rounds:
                refs = [
                    (1 - pi[r.playout.pick - 1])
                    if action is Action.SWITCH
                    else pi[r.playout.pick - 1]
                    for r, pi in rounds
                ]
                by_action[name] = {
                    "rounds": len(rounds),
                    "wins": wins,
                    "empirical_rate": str(Fraction(wins, len(rounds))),
                    "exact_reference": str(sum(refs, Fraction(0)) / len(refs)),
                }
            else:
                by_action[name] = {
                    "rounds": 0,
                    "wins": 0,
                    "empirical_rate": None,
                    "exact_reference": None,
                }
        return {
            "rounds": len(records),
            "wins": sum(1 for r in records if r.playout.contestant_wins),
            "by_action": by_action,
        }

    @app.get("/snapshot")
    def snapshot():
        return store.snapshot()

    @app.get("/fixtures")
    def fixtures():
        return {
            "matrices": ["C", "c3"],
            "bimatrices": ["zero-sum", "alpha", "beta", "gamma", "delta"],
        }

    @app.post("/solve")
    def solve_endpoint(body: SolveBody):
        try:
            if body.matrix is not None:
                matrix = PayoffMatrix.from_json_dict(body.matrix)
                name = "custom"
            elif body.fixture is not None:
                matrix = get_matrix_fixture(body.fixture)
                name = body.fixture
            else:
                raise ValueError("fixture or matrix is required")
            solution = solve(matrix)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        return {"fixture": name, **solution.to_json_dict()}

    @app.post("/best-response")
    def best_response_endpoint(body: BestResponseBody):
        config = _parse_host_config(body.host, body.pi, body.lam)
        report = best_response(build_contestant_matrix(), config)
        classification = None
        if config.is_fully_supported():
            c = classify_equilibrium_response(report.pi, True)
            classification = {
                "case": c.case,
                "support": list(c.support),
                "strategy": None if c.strategy is None else c.strategy.to_json_dict(),
            }
        return {**report.to_json_dict(), "classification": classification}

    @app.post("/nash")
    def nash_endpoint(body: NashBody):
        try:
            if body.bimatrix is not None:
                bim = Bimatrix.from_json_dict(body.bimatrix)
                name = "custom"
            elif body.fixture is not None:
                bim = get_bimatrix_fixture(body.fixture.split(":", 1)[0])
                name = body.fixture
            else:
                raise ValueError("fixture or bimatrix is required")
            if body.mode not in ("pure", "mixed", "both"):
                raise ValueError("mode must be pure, mixed or both")
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        data: dict = {"fixture": name}
        if body.mode in ("pure", "both"):
            data["pure"] = [e.to_json_dict() for e in pure_nash(bim)]
        if body.mode in ("mixed", "both"):
            data["mixed"] = mixed_nash(bim).to_json_dict()
        return data

    if frontend_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")

    return app
