/** Strategy lab: exact best-response analysis for a configured host mixture.
 *
 * Validates the fraction inputs locally, then displays the service's
 * numbers verbatim (value, best pure set, equilibrium-response case).
 */

import { ApiClient, ApiError } from "./api.js";
import { inUnitInterval, sumsToOne } from "./fractions.js";
import type { BestResponseReport } from "./types.js";

export interface LabModel {
  report: BestResponseReport | null;
  lines: string[];
  error: string | null;
}

export class StrategyLab {
  private report: BestResponseReport | null = null;
  private error: string | null = null;

  constructor(private readonly api: ApiClient) {}

  model(): LabModel {
    const lines: string[] = [];
    if (this.report) {
      lines.push(`best-response value: ${this.report.value}`);
      lines.push(`best pure responses: ${this.report.best_pure_set.join(", ")}`);
      if (this.report.pi) {
        lines.push(`car placement: (${this.report.pi.join(", ")})`);
      }
      if (this.report.classification) {
        lines.push(
          `equilibrium case ${this.report.classification.case}: ` +
            `support {${this.report.classification.support.join(", ")}}`,
        );
      }
      for (const exclusion of this.report.excluded) {
        lines.push(
          `excluded ${exclusion.strategy} (rule ${exclusion.rule}), payoff ${exclusion.payoff}`,
        );
      }
    }
    return { report: this.report, lines, error: this.error };
  }

  /** Inline validation, mirroring the service's own simplex checks. */
  validate(pi: string[], lambda: string[]): string | null {
    if (pi.length !== 3 || lambda.length !== 3) {
      return "three car weights and three reveal odds are required";
    }
    for (const text of [...pi, ...lambda]) {
      if (!inUnitInterval(text)) {
        return `"${text}" is not a fraction in [0, 1] (write p/q, not decimals)`;
      }
    }
    if (!sumsToOne(pi)) {
      return "the car weights must sum to exactly 1";
    }
    return null;
  }

  async analyze(pi: string[], lambda: string[]): Promise<void> {
    const problem = this.validate(pi, lambda);
    if (problem) {
      this.error = problem;
      this.report = null;
      return;
    }
    try {
      this.report = await this.api.bestResponse({ pi, lambda });
      this.error = null;
    } catch (error) {
      if (error instanceof ApiError) {
        this.error = `${error.status}: ${error.message}`;
        this.report = null;
        return;
      }
      throw error;
    }
  }
}
