// Overlay geometry: the graph is anchored to the editor's right edge
// and must never crowd out the code. Its width is capped at half the
// editor on ordinary screens and a third on high-resolution ones.

/** Viewport width (logical px) at or above which the stricter cap applies. */
export const HIGH_RES_THRESHOLD = 2560;

/** Maximum overlay width as a fraction of the editor width. */
export function maxOverlayFraction(viewportWidth: number): number {
  return viewportWidth >= HIGH_RES_THRESHOLD ? 1 / 3 : 0.5;
}

/**
 * Pick the overlay width in pixels. The overlay prefers a fixed natural
 * width but is clamped to the fraction allowed at this viewport size.
 */
export function overlayWidth(
  editorWidth: number,
  viewportWidth: number,
  preferred = 420,
): number {
  const cap = editorWidth * maxOverlayFraction(viewportWidth);
  return Math.floor(Math.min(preferred, cap));
}
