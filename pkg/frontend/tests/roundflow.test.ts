import { describe, expect, test } from "vitest";

import { ApiClient } from "../src/api.js";
import { GameController } from "../src/state.js";
import { MockService } from "./mockService.js";

const FIXTURES = ["Q*:1,1,1", "Q*:1/2,1/2,1/2"];

describe("scripted playground rounds", () => {
  test("plays 20 rounds against two fixtures without state errors", async () => {
    for (const fixture of FIXTURES) {
      const mock = new MockService(20260810);
      const api = new ApiClient("", mock.fetch);
      const game = new GameController(api);

      await game.newSession({ host: fixture });
      expect(game.model().banner).toBeNull();
      await game.toggleAdvice(true);

      for (let round = 0; round < 20; round++) {
        await game.pickDoor((round % 3) + 1);
        let model = game.model();
        expect(model.banner).toBeNull();
        expect(model.phase).toBe("awaiting_final");
        expect(model.advice).not.toBeNull();
        // The car must never be rendered before the outcome.
        for (const door of model.doors) {
          expect(door.car).toBeNull();
        }
        await game.decide(round % 4 === 3 ? "Notswitch" : "Switch");
        model = game.model();
        expect(model.banner).toBeNull();
        expect(model.phase).toBe("finished");
        expect(model.lastOutcome).not.toBeNull();
        // Now, and only now, exactly one door carries the car marker.
        expect(model.doors.filter((d) => d.car === true)).toHaveLength(1);
      }

      const model = game.model();
      expect(model.roundsPlayed).toBe(20);
      expect(model.stats?.rounds).toBe(20);
      // Stats panel holds the service payload byte-for-byte.
      expect(JSON.stringify(model.stats)).toBe(mock.lastStatsText);
      expect(model.statsLines[0]).toBe(
        `rounds ${model.stats!.rounds}, wins ${model.stats!.wins}`,
      );
      const switchStats = model.stats!.by_action.Switch;
      expect(model.statsLines[1]).toContain(`empirical ${switchStats.empirical_rate}`);
      expect(model.statsLines[1]).toContain(`exact ${switchStats.exact_reference}`);
    }
  });

  test("exact references: switching against a Q* fixture is worth 2/3", async () => {
    const mock = new MockService(7);
    const game = new GameController(new ApiClient("", mock.fetch));
    await game.newSession({ host: "Q*:1/2,1/2,1/2" });
    for (let round = 0; round < 6; round++) {
      await game.pickDoor((round % 3) + 1);
      await game.decide("Switch");
    }
    const stats = game.model().stats!;
    expect(stats.by_action.Switch.exact_reference).toBe("2/3");
    expect(stats.by_action.Notswitch.exact_reference).toBeNull();
  });

  test("turn-order violations surface as banners, not crashes", async () => {
    const mock = new MockService(3);
    const game = new GameController(new ApiClient("", mock.fetch));

    await game.decide("Switch"); // no session yet
    expect(game.model().banner).toContain("create a session first");

    await game.newSession({ host: "Q*:1,1,1" });
    await game.pickDoor(1);
    await game.pickDoor(2); // double pick: server answers 409
    const model = game.model();
    expect(model.banner).toContain("409");
    expect(model.phase).toBe("awaiting_final"); // state unharmed
    await game.decide("Switch");
    expect(game.model().phase).toBe("finished");
  });

  test("against the always-Left host a Right reveal makes switching certain", async () => {
    const mock = new MockService(99);
    const game = new GameController(new ApiClient("", mock.fetch));
    await game.newSession({ host: "Q*:1,1,1" });
    await game.toggleAdvice(true);
    let sawRightReveal = false;
    for (let round = 0; round < 30; round++) {
      await game.pickDoor(2);
      const model = game.model();
      const revealedDoor = model.doors.find((d) => d.revealed)!.door;
      if (revealedDoor === 3) {
        // Door 3 is the Right door of pick 2.
        sawRightReveal = true;
        expect(model.advice?.exact_win_prob_if_switch).toBe("1");
        expect(model.advice?.recommended_action).toBe("Switch");
      }
      await game.decide("Switch");
    }
    expect(sawRightReveal).toBe(true);
  });

  test("advice stays hidden until toggled on", async () => {
    const mock = new MockService(5);
    const game = new GameController(new ApiClient("", mock.fetch));
    await game.newSession({ host: "Q*:1/2,1/2,1/2" });
    await game.pickDoor(1);
    expect(game.model().advice).toBeNull();
    await game.toggleAdvice(true);
    const advice = game.model().advice;
    expect(advice?.exact_win_prob_if_switch).toBe("2/3");
    expect(advice?.exact_win_prob_if_stay).toBe("1/3");
  });

  test("hidden-mixture sessions only show the guarantee", async () => {
    const mock = new MockService(11);
    const game = new GameController(new ApiClient("", mock.fetch));
    await game.newSession({ host: "Q*:1,1,1", advice_mode: "hidden" });
    await game.toggleAdvice(true);
    await game.pickDoor(1);
    const advice = game.model().advice;
    expect(advice?.guarantee_only).toBe(true);
    expect(advice?.exact_win_prob_if_switch).toBe("2/3");
  });
});
