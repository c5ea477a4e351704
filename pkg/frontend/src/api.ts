/**
 * Client for the local JSON service. At most one request per command is in
 * flight: firing a command aborts the previous request for the same command.
 */

import type { Command, JobOptions, JobResponse } from './types.js';

export class ApiClient {
  private inflight = new Map<Command, AbortController>();

  constructor(public baseUrl: string) {}

  /** POST a command; resolves with the service's JSON payload. */
  async run(
    command: Command,
    cells: string,
    options: JobOptions = {},
    timeoutMs = 120_000,
  ): Promise<JobResponse> {
    this.inflight.get(command)?.abort();
    const controller = new AbortController();
    this.inflight.set(command, controller);
    const timer = setTimeout(() => controller.abort(), timeoutMs);
    try {
      const resp = await fetch(`${this.baseUrl}/api/v1/${command}`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify({ cells, options }),
        signal: controller.signal,
      });
      return (await resp.json()) as JobResponse;
    } finally {
      clearTimeout(timer);
      if (this.inflight.get(command) === controller) {
        this.inflight.delete(command);
      }
    }
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/api/v1/health`);
      return resp.ok;
    } catch {
      return false;
    }
  }
}
