/**
 * Editor state and the pure helpers behind the UI: cell toggling, the
 * brace-list encoding, and the view models derived from service responses.
 * Nothing in here touches the DOM or computes any algebra - results come
 * from the service verbatim.
 */

import type {
  ClassifyResult,
  Command,
  CompareResult,
  HilbertResult,
  JobResponse,
} from './types.js';

export interface Cell {
  i: number; // column of the lower-left corner
  j: number; // row of the lower-left corner
}

export interface EditorState {
  cols: number;
  rows: number;
  /** toggled cells keyed "i,j" */
  cells: Map<string, Cell>;
  /** last response per command */
  responses: Map<Command, JobResponse>;
  /** commands with a request in flight */
  pending: Set<Command>;
}

export function createState(cols = 12, rows = 12): EditorState {
  return { cols, rows, cells: new Map(), responses: new Map(), pending: new Set() };
}

export function cellKey(i: number, j: number): string {
  return `${i},${j}`;
}

export function toggleCell(state: EditorState, i: number, j: number): void {
  const key = cellKey(i, j);
  if (state.cells.has(key)) {
    state.cells.delete(key);
  } else {
    state.cells.set(key, { i, j });
  }
}

export function sortedCells(state: EditorState): Cell[] {
  return [...state.cells.values()].sort((a, b) => a.i - b.i || a.j - b.j);
}

/**
 * The brace-list encoding of the toggled cells: each cell as its diagonal
 * corners, lower left first, cells ordered by lower-left corner. An empty
 * selection renders the `{}` placeholder (compute stays disabled).
 */
export function editorToEncoding(state: EditorState): string {
  const cells = sortedCells(state);
  if (cells.length === 0) {
    return '{}';
  }
  const parts = cells.map(
    (c) => `{{${c.i}, ${c.j}}, {${c.i + 1}, ${c.j + 1}}}`,
  );
  return `{${parts.join(', ')}}`;
}

export function computeEnabled(state: EditorState): boolean {
  return state.cells.size > 0;
}

/**
 * Parse a brace-list or JSON encoding into cells (for clipboard/file import).
 * Mirrors the service's reader; throws on malformed lists or non-unit cells.
 */
export function parseEncoding(text: string): Cell[] {
  const normalized = text.trim().replace(/\{/g, '[').replace(/\}/g, ']');
  if (normalized === '' || normalized === '[]') {
    return [];
  }
  let data: unknown;
  try {
    data = JSON.parse(normalized);
  } catch {
    throw new Error('malformed cell list');
  }
  if (!Array.isArray(data)) {
    throw new Error('encoding must be a list of cells');
  }
  const out: Cell[] = [];
  const seen = new Set<string>();
  for (const entry of data) {
    if (
      !Array.isArray(entry) || entry.length !== 2 ||
      !Array.isArray(entry[0]) || entry[0].length !== 2 ||
      !Array.isArray(entry[1]) || entry[1].length !== 2 ||
      ![...entry[0], ...entry[1]].every((n) => Number.isInteger(n))
    ) {
      throw new Error('each cell must be a pair of integer corner pairs');
    }
    const [[i, j], [k, l]] = entry as [[number, number], [number, number]];
    if (k !== i + 1 || l !== j + 1) {
      throw new Error(`not a unit cell: [[${i},${j}],[${k},${l}]]`);
    }
    const key = cellKey(i, j);
    if (!seen.has(key)) {
      seen.add(key);
      out.push({ i, j });
    }
  }
  return out;
}

export function loadCells(state: EditorState, cells: Cell[]): void {
  state.cells.clear();
  for (const c of cells) {
    state.cells.set(cellKey(c.i, c.j), { ...c });
  }
}

// ---------------------------------------------------------------------------
// view models

export interface Badge {
  label: string;
  on: boolean;
}

export function classifyBadges(result: ClassifyResult): Badge[] {
  return [
    { label: 'polyomino', on: result.is_polyomino },
    { label: 'weakly connected', on: result.weakly_connected },
    { label: 'row convex', on: result.row_convex },
    { label: 'column convex', on: result.column_convex },
    { label: 'convex', on: result.convex },
    { label: 'simple', on: result.simple },
  ];
}

export interface CompareView {
  equal: boolean;
  banner: string;
  extras: string[];
}

export function compareView(result: CompareResult): CompareView {
  if (result.equal) {
    const note = result.theorem_applies
      ? ' (Theorem applies: simple, weakly connected)'
      : '';
    return { equal: true, banner: `I = J: equal${note}`, extras: [] };
  }
  return {
    equal: false,
    banner: 'I ⊊ J: not equal',
    extras: result.extra_generators.map((g) => g.text),
  };
}

export function hilbertView(result: HilbertResult): string {
  return `${result.text}   [multiplicity ${result.multiplicity}]`;
}

/** Rows of the matrix panel; zeros are flagged so the renderer can gray them. */
export function matrixView(entries: string[][]): { text: string; zero: boolean }[][] {
  return entries.map((row) => row.map((e) => ({ text: e, zero: e === '0' })));
}
