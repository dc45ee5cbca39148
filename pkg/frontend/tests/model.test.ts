import { describe, expect, it } from "vitest";
import { SeedPayload } from "../src/api";
import {
  projectNeighborhood,
  projectSeed,
  truncateRendering,
  TERM_DISPLAY_LIMIT,
} from "../src/model";
import { initialPositions, runLayout } from "../src/layout";

const PAYLOAD: SeedPayload = {
  session_id: "s1",
  revision: 3,
  path: [1, 2],
  matrix: { n: 3, r: 2, matrix: [[0, 1], [-1, 0], [1, 0]] },
  variables: [
    { text: "x1^-1 + x1^-1*x2", terms: [
      { coeff: 1, exponents: [-1, 0, 0] },
      { coeff: 1, exponents: [-1, 1, 0] },
    ] },
    { text: "x2", terms: [{ coeff: 1, exponents: [0, 1, 0] }] },
  ],
  reduced_indices: [[-1, 1], [0, 1]],
  quiver: { n: 3, r: 2, frozen: [3], arrows: [[1, 2, 1], [3, 1, 1]] },
};

describe("projectSeed", () => {
  it("mirrors the payload verbatim", () => {
    const model = projectSeed(PAYLOAD);
    expect(model.variables.map((v) => v.fullText)).toEqual([
      "x1^-1 + x1^-1*x2",
      "x2",
    ]);
    expect(model.gvectors).toEqual([[-1, 1], [0, 1]]);
    expect(model.path).toEqual([1, 2]);
    expect(model.revision).toBe(3);
    expect(model.arrows).toEqual([
      { from: 1, to: 2, multiplicity: 1 },
      { from: 3, to: 1, multiplicity: 1 },
    ]);
  });

  it("styles frozen vertices distinctly", () => {
    const model = projectSeed(PAYLOAD);
    expect(model.vertices.map((v) => v.frozen)).toEqual([false, false, true]);
    expect(model.vertices[2].label).toContain("frozen");
  });

  it("is a pure projection: repeated calls are identical", () => {
    expect(projectSeed(PAYLOAD)).toEqual(projectSeed(PAYLOAD));
  });
});

describe("truncateRendering", () => {
  it("passes short renderings through unchanged", () => {
    expect(truncateRendering("x1 + x2", 2)).toBe("x1 + x2");
  });

  it("truncates beyond the display limit and reports the remainder", () => {
    const terms = Array.from({ length: 50 }, (_, i) => `x1^${i + 1}`);
    const text = terms.join(" + ");
    const truncated = truncateRendering(text, 50);
    expect(truncated).toContain("(10 more terms)");
    expect(truncated.split(" + ")).toHaveLength(TERM_DISPLAY_LIMIT + 1);
  });
});

describe("projectNeighborhood", () => {
  it("marks the current seed and keeps counts verbatim", () => {
    const view = projectNeighborhood({
      vertices: [
        { key_id: 0, variables: ["x1", "x2"], reduced_indices: [[1, 0], [0, 1]], path: [] },
        { key_id: 1, variables: ["x1", "y"], reduced_indices: [[1, 0], [0, 1]], path: [2] },
      ],
      edges: [[0, 2, 1]],
      complete: false,
      current: 0,
      truncated: true,
      revision: 4,
    });
    expect(view.nodes).toHaveLength(2);
    expect(view.nodes[0].current).toBe(true);
    expect(view.nodes[1].current).toBe(false);
    expect(view.links).toEqual([{ a: 0, b: 1, vertex: 2 }]);
    expect(view.truncated).toBe(true);
  });
});

describe("layout", () => {
  it("pins frozen vertices and never moves them", () => {
    const points = initialPositions([1, 2, 3], new Set([3]), 600, 400);
    const before = points.find((p) => p.id === 3)!;
    const pinnedX = before.x;
    const pinnedY = before.y;
    runLayout(points, [{ a: 1, b: 2 }, { a: 3, b: 1 }], { width: 600, height: 400 });
    const after = points.find((p) => p.id === 3)!;
    expect(after.x).toBe(pinnedX);
    expect(after.y).toBe(pinnedY);
  });

  it("keeps free vertices inside the canvas", () => {
    const points = initialPositions([1, 2, 3, 4], new Set(), 300, 200);
    runLayout(points, [{ a: 1, b: 2 }, { a: 2, b: 3 }, { a: 3, b: 4 }], {
      width: 300,
      height: 200,
    });
    for (const p of points) {
      expect(p.x).toBeGreaterThanOrEqual(20);
      expect(p.x).toBeLessThanOrEqual(280);
      expect(p.y).toBeGreaterThanOrEqual(20);
      expect(p.y).toBeLessThanOrEqual(180);
    }
  });

  it("is deterministic for identical payloads", () => {
    const a = runLayout(initialPositions([1, 2, 3], new Set([3]), 600, 400), [{ a: 1, b: 2 }], { width: 600, height: 400 });
    const b = runLayout(initialPositions([1, 2, 3], new Set([3]), 600, 400), [{ a: 1, b: 2 }], { width: 600, height: 400 });
    expect(a).toEqual(b);
  });
});
