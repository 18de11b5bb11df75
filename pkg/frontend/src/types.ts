/** Wire types for the Monty Hall service, mirrored from its JSON schemas. */

export type Phase = "awaiting_pick" | "awaiting_final" | "finished";
export type SideLetter = "L" | "R";
export type FinalAction = "Switch" | "Notswitch";

export interface SessionView {
  session_id: string;
  state: Phase;
  rounds_played: number;
  pick: number | null;
  revealed: number | null;
  revealed_side: SideLetter | null;
}

export interface PlayoutView {
  car_door: number;
  pick: number;
  revealed: number;
  revealed_side: SideLetter;
  final_choice: number;
  contestant_wins: boolean;
}

export interface FinalResponse {
  session_id: string;
  state: "finished";
  rounds_played: number;
  playout: PlayoutView;
}

export interface Advice {
  recommended_action: FinalAction | "either";
  exact_win_prob_if_switch: string;
  exact_win_prob_if_stay: string;
  guarantee_only?: boolean;
}

export interface ActionStats {
  rounds: number;
  wins: number;
  empirical_rate: string | null;
  exact_reference: string | null;
}

export interface Stats {
  rounds: number;
  wins: number;
  by_action: { Switch: ActionStats; Notswitch: ActionStats };
}

export interface Classification {
  case: 1 | 2 | 3;
  support: string[];
  strategy: unknown;
}

export interface BestResponseReport {
  value: string;
  best_pure_set: string[];
  excluded: { strategy: string; rule: string; payoff: string }[];
  pi: string[] | null;
  classification: Classification | null;
}

/** Host configuration sent to POST /sessions or /best-response. */
export interface HostConfig {
  host?: string;
  pi?: string[];
  lambda?: string[];
  seed?: number;
  advice_mode?: "declared" | "hidden";
}
