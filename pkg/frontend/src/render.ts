/**
 * @fileoverview SVG to PNG rasterisation with a bundled font.
 *
 * The rasteriser loads only the font shipped in assets/, never system
 * fonts, so PNG bytes depend on nothing but the SVG markup. Rendering
 * the same markup twice yields byte-identical files on any host.
 */

import * as path from "node:path";
import { Resvg } from "@resvg/resvg-js";

const FONT_PATH = path.join(__dirname, "..", "assets", "DejaVuSans.ttf");

/** Raster scale applied to the SVG's nominal pixel size. */
export const PNG_ZOOM = 2;

/** Rasterises SVG markup to PNG bytes deterministically. */
export function svgToPng(markup: string): Buffer {
  const renderer = new Resvg(markup, {
    fitTo: { mode: "zoom", value: PNG_ZOOM },
    font: {
      loadSystemFonts: false,
      fontFiles: [FONT_PATH],
      defaultFontFamily: "DejaVu Sans",
    },
  });
  return Buffer.from(renderer.render().asPng());
}
