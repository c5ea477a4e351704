/** Wire types for the /api/v1 JSON service. */

export type Command =
  | 'classify'
  | 'ideal'
  | 'matrix'
  | 'toric'
  | 'compare'
  | 'groebner'
  | 'initial'
  | 'hilbert';

export interface JobOptions {
  field?: string;
  ring_choice?: 1 | 2;
  term_order?: 'lex' | 'grevlex';
  holes?: 'auto' | number[][];
  dedupe?: boolean;
  timeout_seconds?: number;
}

export interface JobRequest {
  cells: string;
  options?: JobOptions;
}

export interface ApiError {
  code: string;
  message: string;
}

export interface JobResponse {
  status: 'ok' | 'error';
  command: Command;
  result?: Record<string, unknown>;
  error?: ApiError;
  warnings: string[];
}

export interface PolynomialPayload {
  text: string;
  terms: { coefficient: string; monomial: [string, number][] }[];
}

export interface ClassifyResult {
  cell_count: number;
  vertex_count: number;
  is_polyomino: boolean;
  weakly_connected: boolean;
  row_convex: boolean;
  column_convex: boolean;
  convex: boolean;
  simple: boolean;
  hole_count: number;
  component_count: number;
  hole_corners: number[][];
  encoding: string;
}

export interface IdealResult {
  ring: { field: string; order: string; variables: string[] };
  generator_count: number;
  generators: PolynomialPayload[];
  hole_corners?: number[][];
}

export interface MatrixResult {
  row_count: number;
  column_count: number;
  entries: string[][];
  text: string;
}

export interface CompareResult {
  equal: boolean;
  theorem_applies: boolean;
  extra_generators: PolynomialPayload[];
  inner_minor_count: number;
  toric_generator_count: number;
  hole_corners: number[][];
}

export interface GroebnerResult {
  ring: { field: string; order: string; variables: string[] };
  basis_size: number;
  basis: PolynomialPayload[];
}

export interface InitialResult {
  ring: { field: string; order: string; variables: string[] };
  monomial_count: number;
  monomials: string[];
}

export interface HilbertResult {
  numerator_coefficients: number[];
  numerator: string;
  denominator_exponent: number;
  multiplicity: number;
  text: string;
}
