// Test backend: index the demo fixture and run the real recommendation
// service over its HTTP bridge on an ephemeral port.

import { ChildProcess, execFileSync, spawn } from 'node:child_process';
import { mkdtempSync, rmSync } from 'node:fs';
import { tmpdir } from 'node:os';
import path from 'node:path';

// vitest runs with the frontend package as its working directory.
const REPO_ROOT = path.resolve(process.cwd(), '..');
const DEMO = path.join(REPO_ROOT, 'fixtures', 'demo');

export interface Backend {
  baseUrl: string;
  stop(): void;
}

export async function startBackend(): Promise<Backend> {
  const workDir = mkdtempSync(path.join(tmpdir(), 'wc-frontend-'));
  const indexPath = path.join(workDir, 'demo.idx');
  execFileSync('python3', ['-m', 'wandercode.cli', 'index', DEMO, '-o', indexPath], {
    cwd: REPO_ROOT,
  });

  const proc: ChildProcess = spawn(
    'python3',
    ['-m', 'wandercode.cli', 'serve', indexPath, '--http', '0', '--root', DEMO],
    { cwd: REPO_ROOT, stdio: ['ignore', 'ignore', 'pipe'] },
  );

  const baseUrl = await new Promise<string>((resolve, reject) => {
    let stderr = '';
    const timer = setTimeout(() => reject(new Error(`server did not start: ${stderr}`)), 20000);
    proc.stderr!.on('data', (chunk: Buffer) => {
      stderr += chunk.toString();
      const match = stderr.match(/listening on (http:\/\/127\.0\.0\.1:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]!);
      }
    });
    proc.on('exit', (code) => {
      clearTimeout(timer);
      reject(new Error(`server exited early (${code}): ${stderr}`));
    });
  });

  return {
    baseUrl,
    stop() {
      proc.kill();
      rmSync(workDir, { recursive: true, force: true });
    },
  };
}
