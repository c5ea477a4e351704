/** DOM rendering: the grid canvas and the result panels. */

import {
  Badge,
  EditorState,
  cellKey,
  classifyBadges,
  compareView,
  hilbertView,
  matrixView,
} from './state.js';
import type {
  ClassifyResult,
  Command,
  CompareResult,
  GroebnerResult,
  HilbertResult,
  IdealResult,
  InitialResult,
  JobResponse,
  MatrixResult,
} from './types.js';

export interface Viewport {
  cellPx: number;
  originX: number; // grid coordinate drawn at the canvas bottom-left
  originY: number;
}

export function drawGrid(
  canvas: HTMLCanvasElement,
  state: EditorState,
  view: Viewport,
  holeCorners: number[][] = [],
): void {
  const ctx = canvas.getContext('2d');
  if (!ctx) return;
  const { width, height } = canvas;
  const s = view.cellPx;
  ctx.clearRect(0, 0, width, height);

  const toX = (i: number) => (i - view.originX) * s;
  const toY = (j: number) => height - (j - view.originY) * s;

  // toggled cells
  ctx.fillStyle = '#4f7fd9';
  for (const cell of state.cells.values()) {
    ctx.fillRect(toX(cell.i), toY(cell.j + 1), s, s);
  }
  // hole corner markers from the last classification
  ctx.fillStyle = '#d9864f';
  for (const [i, j] of holeCorners) {
    ctx.beginPath();
    ctx.arc(toX(i), toY(j), Math.max(3, s / 6), 0, 2 * Math.PI);
    ctx.fill();
  }

  // grid lines
  ctx.strokeStyle = '#d0d4dc';
  ctx.lineWidth = 1;
  ctx.beginPath();
  const iMin = Math.floor(view.originX);
  const iMax = Math.ceil(view.originX + width / s);
  const jMin = Math.floor(view.originY);
  const jMax = Math.ceil(view.originY + height / s);
  for (let i = iMin; i <= iMax; i++) {
    ctx.moveTo(toX(i) + 0.5, 0);
    ctx.lineTo(toX(i) + 0.5, height);
  }
  for (let j = jMin; j <= jMax; j++) {
    ctx.moveTo(0, toY(j) + 0.5);
    ctx.lineTo(width, toY(j) + 0.5);
  }
  ctx.stroke();

  // axes at the origin
  ctx.strokeStyle = '#7a8194';
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(toX(0), 0);
  ctx.lineTo(toX(0), height);
  ctx.moveTo(0, toY(0));
  ctx.lineTo(width, toY(0));
  ctx.stroke();

  // coordinate labels
  ctx.fillStyle = '#555c6e';
  ctx.font = `${Math.max(9, s / 3)}px sans-serif`;
  for (let i = iMin; i <= iMax; i++) {
    ctx.fillText(String(i), toX(i) + 2, height - 3);
  }
  for (let j = jMin; j <= jMax; j++) {
    ctx.fillText(String(j), 2, toY(j) - 3);
  }
}

export function canvasToCell(
  canvas: HTMLCanvasElement,
  view: Viewport,
  px: number,
  py: number,
): { i: number; j: number } {
  const i = Math.floor(px / view.cellPx + view.originX);
  const j = Math.floor((canvas.height - py) / view.cellPx + view.originY);
  return { i, j };
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderBadges(host: HTMLElement, badges: Badge[], holeCount: number): void {
  host.innerHTML = '';
  for (const b of badges) {
    host.appendChild(el('span', `badge ${b.on ? 'on' : 'off'}`, b.label));
  }
  host.appendChild(
    el('span', `badge ${holeCount === 0 ? 'on' : 'warn'}`, `holes: ${holeCount}`),
  );
}

function renderPolyList(host: HTMLElement, title: string, items: string[]): void {
  host.innerHTML = '';
  host.appendChild(el('div', 'panel-title', title));
  const list = el('ul', 'poly-list');
  for (const t of items) {
    list.appendChild(el('li', 'poly', t));
  }
  host.appendChild(list);
}

export function renderResult(host: HTMLElement, response: JobResponse): void {
  const command = response.command;
  if (response.status === 'error') {
    host.innerHTML = '';
    host.appendChild(el('div', 'panel-title', command));
    const err = response.error!;
    host.appendChild(el('div', 'error', `${err.code}: ${err.message}`));
    return;
  }
  switch (command) {
    case 'classify': {
      // classification renders into the badge strip, handled by the caller
      break;
    }
    case 'ideal':
    case 'toric': {
      const r = response.result as unknown as IdealResult;
      renderPolyList(
        host,
        `${command}: ${r.generator_count} generators`,
        r.generators.map((g) => g.text),
      );
      break;
    }
    case 'groebner': {
      const r = response.result as unknown as GroebnerResult;
      renderPolyList(
        host,
        `reduced basis: ${r.basis_size} elements`,
        r.basis.map((g) => g.text),
      );
      break;
    }
    case 'initial': {
      const r = response.result as unknown as InitialResult;
      renderPolyList(host, `initial ideal: ${r.monomial_count} monomials`, r.monomials);
      break;
    }
    case 'matrix': {
      const r = response.result as unknown as MatrixResult;
      host.innerHTML = '';
      host.appendChild(el('div', 'panel-title',
        `matrix: ${r.row_count} x ${r.column_count}`));
      const table = el('table', 'matrix');
      for (const row of matrixView(r.entries)) {
        const tr = el('tr', '');
        for (const cell of row) {
          tr.appendChild(el('td', cell.zero ? 'zero' : 'entry', cell.text));
        }
        table.appendChild(tr);
      }
      host.appendChild(table);
      break;
    }
    case 'compare': {
      const r = response.result as unknown as CompareResult;
      const view = compareView(r);
      host.innerHTML = '';
      host.appendChild(el('div', 'panel-title', 'toric comparison'));
      host.appendChild(
        el('div', `banner ${view.equal ? 'equal' : 'unequal'}`, view.banner),
      );
      if (view.extras.length) {
        const list = el('ul', 'poly-list');
        for (const t of view.extras) list.appendChild(el('li', 'poly', t));
        host.appendChild(el('div', 'panel-subtitle', 'extra generators of degree ≥ 3:'));
        host.appendChild(list);
      }
      break;
    }
    case 'hilbert': {
      const r = response.result as unknown as HilbertResult;
      host.innerHTML = '';
      host.appendChild(el('div', 'panel-title', 'reduced Hilbert series'));
      host.appendChild(el('div', 'series', hilbertView(r)));
      break;
    }
  }
  for (const w of response.warnings ?? []) {
    host.appendChild(el('div', 'warning', w));
  }
}

export function applyClassification(
  badgeHost: HTMLElement,
  response: JobResponse,
): number[][] {
  if (response.status !== 'ok') {
    badgeHost.innerHTML = '';
    badgeHost.appendChild(el('span', 'badge warn', response.error!.message));
    return [];
  }
  const r = response.result as unknown as ClassifyResult;
  renderBadges(badgeHost, classifyBadges(r), r.hole_count);
  return r.hole_corners;
}
