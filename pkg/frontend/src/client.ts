// HTTP bridge client: one request envelope per POST /rpc, responses as
// a JSON array. The server assigns a session id on the first request and
// echoes it in a header; we send it back on every later call so state
// (pin, expand, list mode) sticks to this client.

import {
  Envelope,
  ErrorPayload,
  FileContentPayload,
  HelloPayload,
  NavigationPayload,
  RecommendationsPayload,
  SESSION_HEADER,
  isError,
} from './protocol.js';

export class RpcError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'RpcError';
  }
}

export class ServiceClient {
  private seq = 0;
  private sessionId: string | null = null;

  constructor(private readonly baseUrl: string) {}

  /** Send one request and return its matching response envelope. */
  async rpc<P>(kind: string, payload: unknown = {}): Promise<Envelope<P>> {
    const request: Envelope = { kind, seq: ++this.seq, payload };
    const headers: Record<string, string> = { 'Content-Type': 'application/json' };
    if (this.sessionId !== null) {
      headers[SESSION_HEADER] = this.sessionId;
    }
    const response = await fetch(`${this.baseUrl}/rpc`, {
      method: 'POST',
      headers,
      body: JSON.stringify(request),
    });
    const sid = response.headers.get(SESSION_HEADER);
    if (sid !== null) {
      this.sessionId = sid;
    }
    const messages = (await response.json()) as Envelope[];
    const reply = messages.find((m) => m.seq === request.seq) ?? messages[0];
    if (reply === undefined) {
      throw new RpcError(`empty response to ${kind}`);
    }
    if (isError(reply)) {
      throw new RpcError((reply.payload as ErrorPayload).message);
    }
    return reply as Envelope<P>;
  }

  async hello(): Promise<HelloPayload> {
    return (await this.rpc<HelloPayload>('hello')).payload;
  }

  async cursorMoved(file: string, offset: number): Promise<RecommendationsPayload> {
    return (await this.rpc<RecommendationsPayload>('cursorMoved', { file, offset })).payload;
  }

  async pin(pinned: boolean): Promise<RecommendationsPayload> {
    return (await this.rpc<RecommendationsPayload>('pin', { pinned })).payload;
  }

  async expand(expanded: boolean): Promise<RecommendationsPayload> {
    return (await this.rpc<RecommendationsPayload>('expand', { expanded })).payload;
  }

  async listMode(list: boolean): Promise<RecommendationsPayload> {
    return (await this.rpc<RecommendationsPayload>('listMode', { list })).payload;
  }

  async select(id: string): Promise<NavigationPayload> {
    return (await this.rpc<NavigationPayload>('select', { id })).payload;
  }

  async getFile(file: string): Promise<string> {
    return (await this.rpc<FileContentPayload>('getFile', { file })).payload.content;
  }
}
