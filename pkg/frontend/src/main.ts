// Browser entry point: connect to the service on the page's own origin
// (the backend serves this bundle with `serve --http PORT --ui dist`).

import { App } from './app.js';
import { ServiceClient } from './client.js';

async function boot(): Promise<void> {
  const root = document.getElementById('app');
  if (root === null) {
    throw new Error('missing #app element');
  }
  const app = new App({ root, client: new ServiceClient(window.location.origin) });
  await app.start();
  const initial = new URLSearchParams(window.location.search).get('file');
  if (initial !== null) {
    await app.openFile(initial);
  }
}

void boot();
