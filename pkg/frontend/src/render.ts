// DOM builders for the recommendation overlay and the list-style panel.
//
// Every node is rendered identically (method name over class name) —
// nothing is encoded in the appearance beyond position and order. The
// graph form puts callers in a left column, the focus in the middle and
// callees on the right, with straight connector edges drawn in an SVG
// layer behind the columns.

import { MethodRef, Recommendation, RecommendationsPayload } from './protocol.js';

export interface OverlayHandlers {
  onSelect(id: string): void;
  onPinToggle(): void;
  onExpandToggle(): void;
  onModeToggle(): void;
}

const SVG_NS = 'http://www.w3.org/2000/svg';

function node(
  doc: Document,
  ref: MethodRef,
  cls: string,
  onClick?: (id: string) => void,
): HTMLElement {
  const el = doc.createElement('div');
  el.className = `wc-node ${cls}`;
  el.dataset.id = ref.id;
  const method = doc.createElement('div');
  method.className = 'wc-node-method';
  method.textContent = ref.methodName;
  const klass = doc.createElement('div');
  klass.className = 'wc-node-class';
  klass.textContent = ref.className;
  el.append(method, klass);
  if (onClick) {
    el.addEventListener('click', () => onClick(ref.id));
  }
  return el;
}

function column(
  doc: Document,
  cls: string,
  entries: Recommendation[],
  onClick: (id: string) => void,
): HTMLElement {
  const col = doc.createElement('div');
  col.className = `wc-column ${cls}`;
  for (const entry of entries) {
    col.appendChild(node(doc, entry, 'wc-node-rec', onClick));
  }
  return col;
}

function button(
  doc: Document,
  cls: string,
  label: string,
  pressed: boolean,
  onClick: () => void,
): HTMLElement {
  const btn = doc.createElement('button');
  btn.className = cls;
  btn.textContent = label;
  btn.setAttribute('aria-pressed', String(pressed));
  btn.addEventListener('click', onClick);
  return btn;
}

function toolbar(
  doc: Document,
  recs: RecommendationsPayload,
  handlers: OverlayHandlers,
): HTMLElement {
  const bar = doc.createElement('div');
  bar.className = 'wc-toolbar';
  bar.append(
    button(doc, 'wc-btn-pin', recs.pinned ? 'unpin' : 'pin', recs.pinned, handlers.onPinToggle),
    button(
      doc,
      'wc-btn-expand',
      recs.expanded ? 'collapse' : 'expand',
      recs.expanded,
      handlers.onExpandToggle,
    ),
    button(doc, 'wc-btn-mode', recs.mode === 'list' ? 'graph' : 'list', recs.mode === 'list', handlers.onModeToggle),
  );
  return bar;
}

/** Connector edges from each caller into the focus and out to each callee. */
function edgeLayer(doc: Document, callers: number, callees: number): SVGElement {
  const svg = doc.createElementNS(SVG_NS, 'svg');
  svg.setAttribute('class', 'wc-edges');
  const rows = Math.max(callers, callees, 1);
  const midY = 50;
  const drawFan = (count: number, x1: string, x2: string) => {
    for (let i = 0; i < count; i += 1) {
      const line = doc.createElementNS(SVG_NS, 'line');
      line.setAttribute('x1', x1);
      line.setAttribute('y1', `${((i + 0.5) / rows) * 100}%`);
      line.setAttribute('x2', x2);
      line.setAttribute('y2', `${midY}%`);
      svg.appendChild(line);
    }
  };
  drawFan(callers, '0%', '50%');
  drawFan(callees, '100%', '50%');
  return svg;
}

/** Render the graph form of a non-empty recommendation set. */
export function renderGraph(
  doc: Document,
  recs: RecommendationsPayload,
  handlers: OverlayHandlers,
): HTMLElement {
  if (recs.focus === null) {
    throw new Error('renderGraph needs a focus method');
  }
  const callers = recs.callers ?? [];
  const callees = recs.callees ?? [];
  const root = doc.createElement('div');
  root.className = 'wc-graph';
  root.appendChild(toolbar(doc, recs, handlers));
  const body = doc.createElement('div');
  body.className = 'wc-graph-body';
  body.appendChild(edgeLayer(doc, callers.length, callees.length));
  body.appendChild(column(doc, 'wc-callers', callers, handlers.onSelect));
  const center = doc.createElement('div');
  center.className = 'wc-column wc-focus-column';
  center.appendChild(node(doc, recs.focus, 'wc-node-focus'));
  body.appendChild(center);
  body.appendChild(column(doc, 'wc-callees', callees, handlers.onSelect));
  root.appendChild(body);
  return root;
}

/** Render the control-style docked vertical list (relevance order). */
export function renderList(
  doc: Document,
  recs: RecommendationsPayload,
  handlers: OverlayHandlers,
): HTMLElement {
  const root = doc.createElement('div');
  root.className = 'wc-list';
  root.appendChild(toolbar(doc, recs, handlers));
  const rows = doc.createElement('div');
  rows.className = 'wc-list-rows';
  for (const entry of recs.merged ?? []) {
    const row = node(doc, entry, 'wc-row', handlers.onSelect);
    row.addEventListener('mouseenter', () => row.classList.add('wc-hover'));
    row.addEventListener('mouseleave', () => row.classList.remove('wc-hover'));
    rows.appendChild(row);
  }
  root.appendChild(rows);
  return root;
}
