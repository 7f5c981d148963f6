// Client-side view state. Deliberately thin: every recommendation
// decision lives server-side, so the only things tracked here are the
// open tabs, the cursor, and the last payload the service sent.

import { RecommendationsPayload } from './protocol.js';

export interface Cursor {
  file: string;
  offset: number;
}

export class ViewState {
  /** Ordered open-file tabs; insertion order is tab order. */
  readonly openFiles: string[] = [];
  activeFile: string | null = null;
  cursor: Cursor | null = null;
  /** Last recommendation set received from the service. */
  graph: RecommendationsPayload | null = null;

  get mode(): 'graph' | 'list' {
    return this.graph?.mode ?? 'graph';
  }

  /** Open a file in a tab (or activate its existing tab). */
  openTab(file: string): void {
    if (!this.openFiles.includes(file)) {
      this.openFiles.push(file);
    }
    this.activeFile = file;
  }

  setCursor(file: string, offset: number): void {
    this.cursor = { file, offset };
  }

  /** True when there is something to draw in the overlay. */
  get hasRecommendations(): boolean {
    return this.graph !== null && this.graph.focus !== null;
  }
}
