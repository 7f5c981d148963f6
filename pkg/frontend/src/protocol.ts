// Wire-protocol types shared with the recommendation service.
//
// The service speaks newline-delimited JSON envelopes; over the HTTP
// bridge each POST /rpc carries one request envelope and returns a JSON
// array of response envelopes.

export const PROTOCOL_VERSION = 1;

/** Header carrying the per-client session id on the HTTP bridge. */
export const SESSION_HEADER = 'X-Wandercode-Session';

export interface Envelope<P = unknown> {
  kind: string;
  seq: number;
  payload: P;
}

/** One method reference as it appears in `focus`. */
export interface MethodRef {
  id: string;
  methodName: string;
  className: string;
  file: string;
  spanStart: number;
}

/** A ranked caller/callee entry. */
export interface Recommendation extends MethodRef {
  relevance: number;
  rank: number;
}

export interface RecommendationsPayload {
  mode: 'graph' | 'list';
  pinned: boolean;
  expanded: boolean;
  changed: boolean;
  focus: MethodRef | null;
  callers?: Recommendation[];
  callees?: Recommendation[];
  merged?: Recommendation[];
}

export interface NavigationPayload {
  id: string;
  file: string;
  spanStart: number;
}

export interface FileContentPayload {
  file: string;
  content: string;
}

export interface HelloPayload {
  server: string;
  protocolVersion: number;
  indexVersion: string;
}

export interface ErrorPayload {
  message: string;
}

export function isError(msg: Envelope): msg is Envelope<ErrorPayload> {
  return msg.kind === 'error';
}
