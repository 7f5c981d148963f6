// Application shell: file tabs, a read-only code pane, and the
// recommendation overlay anchored to the pane's right edge. All
// recommendation logic is server-side; this class forwards user events
// over the protocol and re-renders from whatever payload comes back.

import { ServiceClient, RpcError } from './client.js';
import { overlayWidth } from './layout.js';
import { RecommendationsPayload } from './protocol.js';
import { OverlayHandlers, renderGraph, renderList } from './render.js';
import { ViewState } from './state.js';

export interface Measure {
  editorWidth: number;
  viewportWidth: number;
}

export interface AppOptions {
  root: HTMLElement;
  client: ServiceClient;
  /** Override geometry probing (used by layout tests; defaults to the DOM). */
  measure?: () => Measure;
}

export class App {
  readonly state = new ViewState();

  private readonly root: HTMLElement;
  private readonly client: ServiceClient;
  private readonly measure: () => Measure;
  private readonly tabs: HTMLElement;
  private readonly editor: HTMLElement;
  private readonly code: HTMLPreElement;
  private readonly overlay: HTMLElement;
  private readonly contents = new Map<string, string>();

  constructor(options: AppOptions) {
    this.root = options.root;
    this.client = options.client;
    const doc = this.root.ownerDocument;
    this.measure =
      options.measure ??
      (() => ({
        editorWidth: this.editor.clientWidth || doc.defaultView?.innerWidth || 1280,
        viewportWidth: doc.defaultView?.innerWidth ?? 1280,
      }));

    this.tabs = doc.createElement('div');
    this.tabs.className = 'wc-tabs';
    this.editor = doc.createElement('div');
    this.editor.className = 'wc-editor';
    this.code = doc.createElement('pre');
    this.code.className = 'wc-code';
    this.overlay = doc.createElement('div');
    this.overlay.className = 'wc-overlay';
    this.overlay.hidden = true;
    this.editor.append(this.code, this.overlay);
    this.root.append(this.tabs, this.editor);

    this.code.addEventListener('click', () => this.onCodeClick());
  }

  async start(): Promise<void> {
    await this.client.hello();
  }

  /** Open a file (fetching it once) and activate its tab. */
  async openFile(file: string): Promise<void> {
    if (!this.contents.has(file)) {
      this.contents.set(file, await this.client.getFile(file));
    }
    this.state.openTab(file);
    this.renderTabs();
    this.renderCode();
  }

  /** Move the cursor and let the service refocus the recommendations. */
  async moveCursor(file: string, offset: number): Promise<void> {
    if (this.state.activeFile !== file) {
      await this.openFile(file);
    }
    this.state.setCursor(file, offset);
    this.applyRecommendations(await this.client.cursorMoved(file, offset));
  }

  async togglePin(): Promise<void> {
    this.applyRecommendations(await this.client.pin(!(this.state.graph?.pinned ?? false)));
  }

  async toggleExpand(): Promise<void> {
    this.applyRecommendations(await this.client.expand(!(this.state.graph?.expanded ?? false)));
  }

  async toggleListMode(): Promise<void> {
    this.applyRecommendations(await this.client.listMode(this.state.mode !== 'list'));
  }

  /**
   * Click-to-navigate: ask the service to resolve the id, then open the
   * target in a (new) tab with the cursor at its declaration. A stale id
   * surfaces as a toast, never a navigation.
   */
  async selectRecommendation(id: string): Promise<void> {
    let target;
    try {
      target = await this.client.select(id);
    } catch (err) {
      if (err instanceof RpcError) {
        this.toast(err.message);
        return;
      }
      throw err;
    }
    await this.moveCursor(target.file, target.spanStart);
  }

  /** The overlay element, for layout assertions. */
  get overlayElement(): HTMLElement {
    return this.overlay;
  }

  private applyRecommendations(payload: RecommendationsPayload): void {
    // `changed` covers the recommendation set only; mode/pin/expand are
    // presentation state and must re-render even on an unchanged set.
    const prev = this.state.graph;
    if (
      !payload.changed &&
      prev !== null &&
      payload.mode === prev.mode &&
      payload.pinned === prev.pinned &&
      payload.expanded === prev.expanded
    ) {
      return;
    }
    this.state.graph = payload;
    this.renderOverlay();
  }

  private renderOverlay(): void {
    const recs = this.state.graph;
    this.overlay.replaceChildren();
    if (recs === null || recs.focus === null) {
      this.overlay.hidden = true;
      return;
    }
    const { editorWidth, viewportWidth } = this.measure();
    this.overlay.style.width = `${overlayWidth(editorWidth, viewportWidth)}px`;
    this.overlay.hidden = false;
    const doc = this.root.ownerDocument;
    const handlers: OverlayHandlers = {
      onSelect: (id) => void this.selectRecommendation(id),
      onPinToggle: () => void this.togglePin(),
      onExpandToggle: () => void this.toggleExpand(),
      onModeToggle: () => void this.toggleListMode(),
    };
    this.overlay.appendChild(
      recs.mode === 'list' ? renderList(doc, recs, handlers) : renderGraph(doc, recs, handlers),
    );
  }

  private renderTabs(): void {
    const doc = this.root.ownerDocument;
    this.tabs.replaceChildren();
    for (const file of this.state.openFiles) {
      const tab = doc.createElement('button');
      tab.className = 'wc-tab' + (file === this.state.activeFile ? ' wc-tab-active' : '');
      tab.textContent = file;
      tab.addEventListener('click', () => void this.openFile(file));
      this.tabs.appendChild(tab);
    }
  }

  private renderCode(): void {
    const file = this.state.activeFile;
    this.code.textContent = file === null ? '' : this.contents.get(file) ?? '';
  }

  private onCodeClick(): void {
    const doc = this.root.ownerDocument;
    const selection = doc.getSelection?.();
    const file = this.state.activeFile;
    if (!selection || selection.anchorNode === null || file === null) {
      return;
    }
    // The code pane holds a single text node, so the anchor offset is
    // the character offset into the file.
    if (selection.anchorNode.parentNode === this.code || selection.anchorNode === this.code) {
      void this.moveCursor(file, selection.anchorOffset);
    }
  }

  private toast(message: string): void {
    const doc = this.root.ownerDocument;
    const el = doc.createElement('div');
    el.className = 'wc-toast';
    el.textContent = message;
    this.root.appendChild(el);
    doc.defaultView?.setTimeout(() => el.remove(), 4000);
  }
}
