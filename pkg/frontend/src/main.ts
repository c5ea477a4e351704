/**
 * Wiring: click-to-toggle grid with pan/zoom, a live encoding panel, debounced
 * auto-classification, and per-command compute buttons against the local
 * service. The draw -> compute -> redraw loop keeps all algebra server-side.
 */

import { ApiClient } from './api.js';
import { applyClassification, canvasToCell, drawGrid, renderResult, Viewport } from './render.js';
import {
  computeEnabled,
  createState,
  editorToEncoding,
  loadCells,
  parseEncoding,
  toggleCell,
} from './state.js';
import type { Command, JobOptions } from './types.js';

const HEAVY_COMMANDS: Command[] = ['ideal', 'matrix', 'groebner', 'initial', 'toric', 'compare', 'hilbert'];
const DEFAULT_SERVICE = 'http://127.0.0.1:8642';

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function main(): void {
  const canvas = byId<HTMLCanvasElement>('grid');
  const encodingBox = byId<HTMLTextAreaElement>('encoding');
  const badgeHost = byId<HTMLElement>('badges');
  const resultHost = byId<HTMLElement>('result');
  const statusHost = byId<HTMLElement>('status');
  const serviceInput = byId<HTMLInputElement>('service-url');
  const fieldInput = byId<HTMLInputElement>('field');
  const orderSelect = byId<HTMLSelectElement>('term-order');
  const ringSelect = byId<HTMLSelectElement>('ring-choice');
  const timeoutInput = byId<HTMLInputElement>('timeout');

  const state = createState(12, 12);
  // 480px canvas at 40px cells: a 12 x 12 window onto the grid
  const view: Viewport = { cellPx: 40, originX: 0, originY: 0 };
  let holeCorners: number[][] = [];
  let classifyTimer: number | undefined;

  serviceInput.value = DEFAULT_SERVICE;
  let api = new ApiClient(DEFAULT_SERVICE);
  serviceInput.addEventListener('change', () => {
    api = new ApiClient(serviceInput.value.replace(/\/$/, ''));
  });

  function options(): JobOptions {
    return {
      field: fieldInput.value || 'qq',
      term_order: orderSelect.value as 'lex' | 'grevlex',
      ring_choice: Number(ringSelect.value) === 2 ? 2 : 1,
      timeout_seconds: Number(timeoutInput.value) || 120,
    };
  }

  function refresh(): void {
    drawGrid(canvas, state, view, holeCorners);
    encodingBox.value = editorToEncoding(state);
    const enabled = computeEnabled(state);
    for (const cmd of HEAVY_COMMANDS) {
      byId<HTMLButtonElement>(`run-${cmd}`).disabled = !enabled || state.pending.has(cmd);
    }
  }

  function setStatus(text: string): void {
    statusHost.textContent = text;
  }

  function scheduleClassify(): void {
    if (classifyTimer !== undefined) window.clearTimeout(classifyTimer);
    classifyTimer = window.setTimeout(() => void runClassify(), 250);
  }

  async function runClassify(): Promise<void> {
    if (!computeEnabled(state)) {
      badgeHost.innerHTML = '';
      holeCorners = [];
      refresh();
      return;
    }
    try {
      const response = await api.run('classify', editorToEncoding(state), options());
      state.responses.set('classify', response);
      holeCorners = applyClassification(badgeHost, response);
      refresh();
    } catch (err) {
      if ((err as Error).name !== 'AbortError') {
        setStatus(`classify failed: ${(err as Error).message} - is the service running?`);
      }
    }
  }

  async function runCommand(cmd: Command): Promise<void> {
    if (!computeEnabled(state)) return;
    state.pending.add(cmd);
    setStatus(`${cmd}: computing (timeout ${options().timeout_seconds}s)`);
    refresh();
    try {
      const response = await api.run(
        cmd, editorToEncoding(state), options(),
        (options().timeout_seconds! + 5) * 1000,
      );
      state.responses.set(cmd, response);
      renderResult(resultHost, response);
      setStatus(response.status === 'ok' ? `${cmd}: done` : `${cmd}: ${response.error?.code}`);
    } catch (err) {
      if ((err as Error).name === 'AbortError') {
        setStatus(`${cmd}: superseded`);
      } else {
        setStatus(`${cmd} failed: ${(err as Error).message}`);
        const retry = document.createElement('button');
        retry.textContent = 'retry';
        retry.onclick = () => void runCommand(cmd);
        resultHost.innerHTML = 'service unreachable ';
        resultHost.appendChild(retry);
      }
    } finally {
      state.pending.delete(cmd);
      refresh();
    }
  }

  // --- grid interaction ---
  let dragging = false;
  let dragged = false;
  let last = { x: 0, y: 0 };

  canvas.addEventListener('mousedown', (ev) => {
    dragging = ev.button === 1 || ev.button === 2 || ev.shiftKey;
    dragged = false;
    last = { x: ev.offsetX, y: ev.offsetY };
  });
  canvas.addEventListener('mousemove', (ev) => {
    if (!dragging) return;
    const dx = ev.offsetX - last.x;
    const dy = ev.offsetY - last.y;
    if (Math.abs(dx) + Math.abs(dy) > 2) dragged = true;
    view.originX -= dx / view.cellPx;
    view.originY += dy / view.cellPx;
    last = { x: ev.offsetX, y: ev.offsetY };
    refresh();
  });
  window.addEventListener('mouseup', () => {
    dragging = false;
  });
  canvas.addEventListener('contextmenu', (ev) => ev.preventDefault());
  canvas.addEventListener('click', (ev) => {
    if (dragged || ev.shiftKey) return;
    const { i, j } = canvasToCell(canvas, view, ev.offsetX, ev.offsetY);
    toggleCell(state, i, j);
    refresh();
    scheduleClassify();
  });
  canvas.addEventListener('wheel', (ev) => {
    ev.preventDefault();
    const next = Math.min(64, Math.max(12, view.cellPx - Math.sign(ev.deltaY) * 4));
    view.cellPx = next;
    refresh();
  }, { passive: false });

  // --- toolbar ---
  for (const cmd of HEAVY_COMMANDS) {
    byId<HTMLButtonElement>(`run-${cmd}`).addEventListener('click', () => void runCommand(cmd));
  }
  byId<HTMLButtonElement>('clear').addEventListener('click', () => {
    state.cells.clear();
    holeCorners = [];
    badgeHost.innerHTML = '';
    resultHost.innerHTML = '';
    refresh();
  });
  byId<HTMLButtonElement>('copy-encoding').addEventListener('click', () => {
    void navigator.clipboard.writeText(editorToEncoding(state));
    setStatus('encoding copied');
  });
  byId<HTMLButtonElement>('download-encoding').addEventListener('click', () => {
    const blob = new Blob([editorToEncoding(state)], { type: 'text/plain' });
    const a = document.createElement('a');
    a.href = URL.createObjectURL(blob);
    a.download = 'cells.txt';
    a.click();
    URL.revokeObjectURL(a.href);
  });
  byId<HTMLButtonElement>('load-encoding').addEventListener('click', () => {
    try {
      loadCells(state, parseEncoding(encodingBox.value));
      refresh();
      scheduleClassify();
      setStatus('encoding loaded');
    } catch (err) {
      setStatus(`cannot load encoding: ${(err as Error).message}`);
    }
  });

  void api.health().then((ok) => {
    setStatus(ok ? 'service reachable' : `service not reachable at ${api.baseUrl} - start it with: polyoideals serve`);
  });
  refresh();
}

document.addEventListener('DOMContentLoaded', main);
