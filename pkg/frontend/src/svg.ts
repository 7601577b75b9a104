/**
 * @fileoverview Deterministic SVG assembly helpers.
 *
 * Every coordinate is formatted with a fixed number of decimals so that
 * rebuilding a figure from the same rows yields byte-identical markup.
 */

/** Font family embedded by the rasteriser; must match the bundled face. */
export const FONT_FAMILY = "DejaVu Sans";

/** Formats a coordinate with two fixed decimals. */
export function fmt(x: number): string {
  const s = x.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

/** Escapes text content for SVG. */
export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Renders one element with sorted-order attributes as written. */
export function el(tag: string, attrs: Record<string, string>, content = ""): string {
  const parts = Object.entries(attrs).map(([k, v]) => `${k}="${v}"`);
  const open = `<${tag}${parts.length > 0 ? " " + parts.join(" ") : ""}`;
  return content === "" ? `${open}/>` : `${open}>${content}</${tag}>`;
}

/** A horizontal or vertical line segment. */
export function line(
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  stroke: string,
  width = 1,
  dash = "",
): string {
  const attrs: Record<string, string> = {
    x1: fmt(x1),
    y1: fmt(y1),
    x2: fmt(x2),
    y2: fmt(y2),
    stroke,
    "stroke-width": fmt(width),
  };
  if (dash !== "") attrs["stroke-dasharray"] = dash;
  return el("line", attrs);
}

/** A filled rectangle. */
export function rect(
  x: number,
  y: number,
  w: number,
  h: number,
  fill: string,
  opacity = 1,
): string {
  const attrs: Record<string, string> = {
    x: fmt(x),
    y: fmt(y),
    width: fmt(w),
    height: fmt(h),
    fill,
  };
  if (opacity !== 1) attrs["fill-opacity"] = fmt(opacity);
  return el("rect", attrs);
}

/** A filled circle. */
export function circle(cx: number, cy: number, r: number, fill: string): string {
  return el("circle", { cx: fmt(cx), cy: fmt(cy), r: fmt(r), fill });
}

/** Anchored text at a point. */
export function text(
  x: number,
  y: number,
  content: string,
  size: number,
  anchor: "start" | "middle" | "end" = "start",
  fill = "#222222",
  rotate = 0,
): string {
  const attrs: Record<string, string> = {
    x: fmt(x),
    y: fmt(y),
    "font-family": FONT_FAMILY,
    "font-size": fmt(size),
    "text-anchor": anchor,
    fill,
  };
  if (rotate !== 0) {
    attrs.transform = `rotate(${fmt(rotate)} ${fmt(x)} ${fmt(y)})`;
  }
  return el("text", attrs, esc(content));
}

/** Wraps element markup in a complete SVG document. */
export function document(width: number, height: number, body: string[]): string {
  const head = el("rect", {
    x: "0",
    y: "0",
    width: fmt(width),
    height: fmt(height),
    fill: "#ffffff",
  });
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}"` +
    ` viewBox="0 0 ${width} ${height}">\n` +
    [head, ...body].join("\n") +
    "\n</svg>\n"
  );
}

/** A linear map from data values to pixel coordinates. */
export interface Scale {
  lo: number;
  hi: number;
  pxLo: number;
  pxHi: number;
}

/** Applies a linear scale. */
export function scale(s: Scale, v: number): number {
  return s.pxLo + ((v - s.lo) / (s.hi - s.lo)) * (s.pxHi - s.pxLo);
}

/** Chooses round tick positions covering [lo, hi] with about n steps. */
export function niceTicks(lo: number, hi: number, n: number): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const raw = (hi - lo) / n;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = (norm <= 1 ? 1 : norm <= 2 ? 2 : norm <= 5 ? 5 : 10) * mag;
  const ticks: number[] = [];
  const first = Math.ceil(lo / step - 1e-9) * step;
  for (let v = first; v <= hi + 1e-9 * step; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

/** Formats a tick label without trailing zero noise. */
export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 10000) return v.toFixed(0);
  if (abs >= 1) return String(Number(v.toFixed(2)));
  return String(Number(v.toFixed(3)));
}
