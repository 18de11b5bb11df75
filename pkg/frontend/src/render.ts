/** DOM binding: paint a RenderModel / LabModel into the page. */

import type { LabModel } from "./lab.js";
import type { RenderModel } from "./state.js";

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node;
}

const PHASE_HINTS: Record<string, string> = {
  no_session: "configure the host and start a session",
  awaiting_pick: "pick a door",
  awaiting_final: "a door is open: switch or stay?",
  finished: "round over; pick a door to play again",
};

export function renderGame(model: RenderModel): void {
  el("phase").textContent = PHASE_HINTS[model.phase] ?? model.phase;
  el("rounds").textContent = String(model.roundsPlayed);

  for (const doorView of model.doors) {
    const button = el(`door-${doorView.door}`);
    button.classList.toggle("picked", doorView.picked);
    button.classList.toggle("revealed", doorView.revealed);
    button.classList.toggle("car", doorView.car === true);
    button.classList.toggle("goat", doorView.car === false);
    let face = "?";
    if (doorView.revealed && model.phase !== "finished") {
      face = "goat";
    } else if (doorView.car === true) {
      face = "car";
    } else if (doorView.car === false) {
      face = "goat";
    }
    button.textContent = `${doorView.door}: ${face}`;
  }

  const finalButtons = el("final-buttons");
  finalButtons.style.display = model.phase === "awaiting_final" ? "" : "none";

  const banner = el("banner");
  banner.textContent = model.banner ?? "";
  banner.style.display = model.banner ? "" : "none";

  const advicePanel = el("advice");
  if (model.adviceEnabled && model.advice) {
    const a = model.advice;
    advicePanel.textContent = a.guarantee_only
      ? `host mixture undisclosed; switching guarantees ${a.exact_win_prob_if_switch}`
      : `advice: ${a.recommended_action} ` +
        `(switch wins ${a.exact_win_prob_if_switch}, stay wins ${a.exact_win_prob_if_stay})`;
  } else {
    advicePanel.textContent = model.adviceEnabled ? "advice appears after the reveal" : "";
  }

  const outcome = el("outcome");
  if (model.phase === "finished" && model.lastOutcome) {
    outcome.textContent = model.lastOutcome.contestant_wins
      ? `you WON: the car was behind door ${model.lastOutcome.car_door}`
      : `you lost: the car was behind door ${model.lastOutcome.car_door}`;
  } else {
    outcome.textContent = "";
  }

  el("stats").textContent = model.statsLines.join("\n");
}

export function renderLab(model: LabModel): void {
  const panel = el("lab-output");
  if (model.error) {
    panel.textContent = `input problem: ${model.error}`;
    return;
  }
  panel.textContent = model.lines.join("\n");
}
