// Pure projection of a server seed payload into everything the canvas and
// side panels draw. No algebra happens here: strings and numbers pass
// through verbatim, at most truncated for display.

import { SeedPayload, NeighborhoodPayload } from "./api";

export const TERM_DISPLAY_LIMIT = 40;

export interface VertexView {
  vertex: number; // 1-based
  frozen: boolean;
  label: string;
  selected: boolean;
}

export interface ArrowView {
  from: number;
  to: number;
  multiplicity: number;
}

export interface VariableView {
  vertex: number;
  text: string; // possibly truncated for display
  fullText: string; // always the verbatim server rendering
  truncated: boolean;
  termCount: number;
}

export interface QuiverCanvasModel {
  vertices: VertexView[];
  arrows: ArrowView[];
  variables: VariableView[];
  gvectors: number[][];
  path: number[];
  revision: number;
}

export function truncateRendering(text: string, termCount: number): string {
  if (termCount <= TERM_DISPLAY_LIMIT) return text;
  // renderings are "t1 + t2 + ..." with binary +/- separators
  const parts = text.split(" + ");
  return parts.slice(0, TERM_DISPLAY_LIMIT).join(" + ") +
    ` + … (${termCount - TERM_DISPLAY_LIMIT} more terms)`;
}

export function projectSeed(payload: SeedPayload, selected: number | null = null): QuiverCanvasModel {
  const frozen = new Set(payload.quiver.frozen);
  const vertices: VertexView[] = [];
  for (let v = 1; v <= payload.quiver.n; v++) {
    vertices.push({
      vertex: v,
      frozen: frozen.has(v),
      label: frozen.has(v) ? `x${v} (frozen)` : `x${v}`,
      selected: v === selected,
    });
  }
  const arrows: ArrowView[] = payload.quiver.arrows.map(([from, to, multiplicity]) => ({
    from,
    to,
    multiplicity,
  }));
  const variables: VariableView[] = payload.variables.map((poly, i) => ({
    vertex: i + 1,
    text: truncateRendering(poly.text, poly.terms.length),
    fullText: poly.text,
    truncated: poly.terms.length > TERM_DISPLAY_LIMIT,
    termCount: poly.terms.length,
  }));
  return {
    vertices,
    arrows,
    variables,
    gvectors: payload.reduced_indices.map((row) => [...row]),
    path: [...payload.path],
    revision: payload.revision,
  };
}

export interface NeighborhoodView {
  nodes: Array<{ id: number; current: boolean; path: number[]; label: string }>;
  links: Array<{ a: number; b: number; vertex: number }>;
  truncated: boolean;
}

export function projectNeighborhood(payload: NeighborhoodPayload): NeighborhoodView {
  return {
    nodes: payload.vertices.map((v) => ({
      id: v.key_id,
      current: v.key_id === payload.current,
      path: [...v.path],
      label: v.variables.join(", "),
    })),
    links: payload.edges.map(([a, vertex, b]) => ({ a, b, vertex })),
    truncated: payload.truncated,
  };
}
