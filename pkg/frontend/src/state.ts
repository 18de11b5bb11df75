/** Game-round state machine for the playground.
 *
 * The controller mirrors the server's session states and never invents
 * game facts: reveals and outcomes render only after the server
 * confirmed them (no optimistic rendering), the car marker exists only
 * in the finished phase, and the stats panel holds the exact service
 * payload untouched.  At most one request is in flight per session.
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  Advice,
  FinalAction,
  HostConfig,
  Phase,
  PlayoutView,
  SessionView,
  Stats,
} from "./types.js";

export interface DoorView {
  door: number;
  picked: boolean;
  revealed: boolean;
  /** null = unknown (server has not disclosed the car yet). */
  car: boolean | null;
}

export interface RenderModel {
  phase: Phase | "no_session";
  doors: DoorView[];
  banner: string | null;
  advice: Advice | null;
  adviceEnabled: boolean;
  stats: Stats | null;
  statsLines: string[];
  lastOutcome: PlayoutView | null;
  roundsPlayed: number;
}

function statsLines(stats: Stats | null): string[] {
  if (stats === null) {
    return [];
  }
  const lines = [`rounds ${stats.rounds}, wins ${stats.wins}`];
  for (const action of ["Switch", "Notswitch"] as const) {
    const s = stats.by_action[action];
    if (s.rounds === 0) {
      lines.push(`${action}: no rounds yet`);
    } else {
      lines.push(
        `${action}: ${s.wins}/${s.rounds} wins, empirical ${s.empirical_rate}, exact ${s.exact_reference}`,
      );
    }
  }
  return lines;
}

export class GameController {
  private session: SessionView | null = null;
  private advice: Advice | null = null;
  private stats: Stats | null = null;
  private lastOutcome: PlayoutView | null = null;
  private banner: string | null = null;
  private busy = false;
  adviceEnabled = false;

  constructor(private readonly api: ApiClient) {}

  /** Snapshot of everything the view needs; pure data, no DOM. */
  model(): RenderModel {
    const phase: Phase | "no_session" = this.session?.state ?? "no_session";
    const doors: DoorView[] = [1, 2, 3].map((door) => ({
      door,
      picked:
        this.session?.pick === door ||
        (phase === "finished" && this.lastOutcome?.pick === door),
      revealed:
        this.session?.revealed === door ||
        (phase === "finished" && this.lastOutcome?.revealed === door),
      // The car position is only ever known from a finished playout.
      car:
        phase === "finished" && this.lastOutcome
          ? this.lastOutcome.car_door === door
          : null,
    }));
    return {
      phase,
      doors,
      banner: this.banner,
      advice: this.advice,
      adviceEnabled: this.adviceEnabled,
      stats: this.stats,
      statsLines: statsLines(this.stats),
      lastOutcome: this.lastOutcome,
      roundsPlayed: this.session?.rounds_played ?? 0,
    };
  }

  private async guarded<T>(work: () => Promise<T>): Promise<T | null> {
    if (this.busy) {
      this.banner = "hold on, the previous request is still running";
      return null;
    }
    this.busy = true;
    this.banner = null;
    try {
      return await work();
    } catch (error) {
      if (error instanceof ApiError) {
        this.banner = `${error.status}: ${error.message}`;
        return null;
      }
      throw error;
    } finally {
      this.busy = false;
    }
  }

  async newSession(config: HostConfig): Promise<void> {
    await this.guarded(async () => {
      this.session = await this.api.createSession(config);
      this.advice = null;
      this.lastOutcome = null;
      this.stats = await this.api.stats(this.session.session_id);
    });
  }

  async pickDoor(door: number): Promise<void> {
    await this.guarded(async () => {
      if (!this.session) {
        throw new ApiError(0, "create a session first");
      }
      const view = await this.api.pick(this.session.session_id, door);
      this.session = view;
      this.lastOutcome = null; // the new round's car is unknown
      this.advice = null;
      if (this.adviceEnabled) {
        this.advice = await this.api.advice(view.session_id);
      }
    });
  }

  async toggleAdvice(enabled: boolean): Promise<void> {
    this.adviceEnabled = enabled;
    if (!enabled) {
      this.advice = null;
      return;
    }
    await this.guarded(async () => {
      if (this.session?.state === "awaiting_final") {
        this.advice = await this.api.advice(this.session.session_id);
      }
    });
  }

  async decide(action: FinalAction): Promise<void> {
    await this.guarded(async () => {
      if (!this.session) {
        throw new ApiError(0, "create a session first");
      }
      const done = await this.api.final(this.session.session_id, action);
      this.lastOutcome = done.playout;
      this.session = {
        ...this.session,
        state: done.state,
        rounds_played: done.rounds_played,
        pick: null,
        revealed: null,
        revealed_side: null,
      };
      this.advice = null;
      this.stats = await this.api.stats(done.session_id);
    });
  }
}
