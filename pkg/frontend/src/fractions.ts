/** Input-side fraction helpers: validation and slider assist.
 *
 * These exist only to validate what the user typed before it is sent to
 * the service as a "p/q" string; every exact number that is *displayed*
 * comes back from the service verbatim.
 */

const RATIONAL = /^[0-9]+(\/[0-9]+)?$/;

export function isRationalLiteral(text: string): boolean {
  if (!RATIONAL.test(text.trim())) {
    return false;
  }
  const [, den] = splitParts(text);
  return den !== 0n;
}

function splitParts(text: string): [bigint, bigint] {
  const trimmed = text.trim();
  const slash = trimmed.indexOf("/");
  if (slash < 0) {
    return [BigInt(trimmed), 1n];
  }
  return [BigInt(trimmed.slice(0, slash)), BigInt(trimmed.slice(slash + 1))];
}

function gcd(a: bigint, b: bigint): bigint {
  while (b) {
    [a, b] = [b, a % b];
  }
  return a < 0n ? -a : a;
}

/** Exact sum check: do the literals add up to exactly 1? */
export function sumsToOne(literals: string[]): boolean {
  let num = 0n;
  let den = 1n;
  for (const text of literals) {
    if (!isRationalLiteral(text)) {
      return false;
    }
    const [n, d] = splitParts(text);
    num = num * d + n * den;
    den *= d;
  }
  return num === den;
}

/** Is the literal inside [0, 1]? (Probabilities and reveal odds.) */
export function inUnitInterval(text: string): boolean {
  if (!isRationalLiteral(text)) {
    return false;
  }
  const [n, d] = splitParts(text);
  return n >= 0n && n <= d;
}

/** Slider assist: map a 0..denominator step to a reduced "p/q" literal. */
export function sliderFraction(step: number, denominator: number): string {
  if (!Number.isInteger(step) || !Number.isInteger(denominator) || denominator < 1) {
    throw new Error(`bad slider position ${step}/${denominator}`);
  }
  const clamped = Math.min(Math.max(step, 0), denominator);
  const g = Number(gcd(BigInt(clamped), BigInt(denominator)));
  const n = clamped / g;
  const d = denominator / g;
  return d === 1 ? String(n) : `${n}/${d}`;
}

/** Approximate numeric value for slider positioning only (never displayed). */
export function approx(text: string): number {
  const [n, d] = splitParts(text);
  return Number(n) / Number(d);
}
