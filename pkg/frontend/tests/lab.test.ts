import { describe, expect, test } from "vitest";

import { ApiClient } from "../src/api.js";
import { StrategyLab } from "../src/lab.js";
import { MockService } from "./mockService.js";

function makeLab() {
  const mock = new MockService(1);
  return new StrategyLab(new ApiClient("", mock.fetch));
}

describe("strategy lab", () => {
  test("uniform car placement: value 2/3, case 3", async () => {
    const lab = makeLab();
    await lab.analyze(["1/3", "1/3", "1/3"], ["1/2", "1/2", "1/2"]);
    const model = lab.model();
    expect(model.error).toBeNull();
    expect(model.report?.value).toBe("2/3");
    expect(model.report?.classification?.case).toBe(3);
    expect(model.lines[0]).toBe("best-response value: 2/3");
    expect(model.lines).toContain(
      "equilibrium case 3: support {1SS, 2SS, 3SS}",
    );
  });

  test("skewed placement: value 5/6 via plan 3SS, case 1", async () => {
    const lab = makeLab();
    await lab.analyze(["1/2", "1/3", "1/6"], ["1/2", "1/2", "1/2"]);
    const model = lab.model();
    expect(model.report?.value).toBe("5/6");
    expect(model.report?.best_pure_set).toEqual(["3SS"]);
    expect(model.report?.classification?.case).toBe(1);
  });

  test("degenerate placement: value 1", async () => {
    const lab = makeLab();
    await lab.analyze(["1", "0", "0"], ["1", "1/2", "1/2"]);
    expect(lab.model().report?.value).toBe("1");
  });

  test("inline validation rejects decimals and bad simplexes", async () => {
    const lab = makeLab();
    await lab.analyze(["0.5", "1/3", "1/6"], ["1/2", "1/2", "1/2"]);
    expect(lab.model().error).toContain("not a fraction");
    await lab.analyze(["1/2", "1/2", "1/2"], ["1/2", "1/2", "1/2"]);
    expect(lab.model().error).toContain("sum to exactly 1");
    await lab.analyze(["1/2", "1/2"], ["1/2", "1/2", "1/2"]);
    expect(lab.model().error).toContain("three car weights");
    expect(lab.model().report).toBeNull();
  });
});
