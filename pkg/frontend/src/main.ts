/** Browser entry point: wire the controllers to the page. */

import { ApiClient } from "./api.js";
import { approx, sliderFraction } from "./fractions.js";
import { StrategyLab } from "./lab.js";
import { renderGame, renderLab } from "./render.js";
import { GameController } from "./state.js";
import type { HostConfig } from "./types.js";

const api = new ApiClient("");
const game = new GameController(api);
const lab = new StrategyLab(api);

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node;
}

function input(id: string): HTMLInputElement {
  return $(id) as HTMLInputElement;
}

function repaint(): void {
  renderGame(game.model());
}

function currentConfig(): HostConfig {
  const preset = (input("preset") as unknown as HTMLSelectElement).value;
  const advice_mode = input("hidden-mode").checked ? "hidden" : "declared";
  if (preset === "custom") {
    return {
      pi: [input("pi-1").value, input("pi-2").value, input("pi-3").value],
      lambda: [input("lam-1").value, input("lam-2").value, input("lam-3").value],
      advice_mode,
    };
  }
  return { host: preset, advice_mode };
}

function bindSlider(sliderId: string, fieldId: string): void {
  const slider = input(sliderId);
  const field = input(fieldId);
  slider.addEventListener("input", () => {
    field.value = sliderFraction(Number(slider.value), 12);
  });
  field.addEventListener("change", () => {
    const value = approx(field.value);
    if (Number.isFinite(value)) {
      slider.value = String(Math.round(value * 12));
    }
  });
}

export function start(): void {
  $("new-session").addEventListener("click", async () => {
    await game.newSession(currentConfig());
    repaint();
  });
  for (const door of [1, 2, 3]) {
    $(`door-${door}`).addEventListener("click", async () => {
      await game.pickDoor(door);
      repaint();
    });
  }
  $("act-switch").addEventListener("click", async () => {
    await game.decide("Switch");
    repaint();
  });
  $("act-stay").addEventListener("click", async () => {
    await game.decide("Notswitch");
    repaint();
  });
  input("advice-toggle").addEventListener("change", async (event) => {
    await game.toggleAdvice((event.target as HTMLInputElement).checked);
    repaint();
  });
  for (const k of [1, 2, 3]) {
    bindSlider(`pi-slider-${k}`, `pi-${k}`);
    bindSlider(`lam-slider-${k}`, `lam-${k}`);
  }
  $("lab-run").addEventListener("click", async () => {
    await lab.analyze(
      [input("lab-pi-1").value, input("lab-pi-2").value, input("lab-pi-3").value],
      [input("lab-lam-1").value, input("lab-lam-2").value, input("lab-lam-3").value],
    );
    renderLab(lab.model());
  });
  repaint();
}

start();
