import { describe, expect, it, vi } from "vitest";
import { ApiClient, SeedPayload } from "../src/api";
import { SessionState } from "../src/state";

const A2 = { n: 2, r: 2, matrix: [[0, 1], [-1, 0]] };

function payload(overrides: Partial<SeedPayload>): SeedPayload {
  return {
    session_id: "s1",
    revision: 0,
    path: [],
    matrix: A2,
    variables: [
      { text: "x1", terms: [{ coeff: 1, exponents: [1, 0] }] },
      { text: "x2", terms: [{ coeff: 1, exponents: [0, 1] }] },
    ],
    reduced_indices: [[1, 0], [0, 1]],
    quiver: { n: 2, r: 2, frozen: [], arrows: [[1, 2, 1]] },
    ...overrides,
  };
}

function clientReturning(...payloads: SeedPayload[]): ApiClient {
  const queue = [...payloads];
  const fetchMock = vi.fn().mockImplementation(() =>
    Promise.resolve(new Response(JSON.stringify(queue.shift()), { status: 200 })),
  );
  return new ApiClient("", fetchMock);
}

describe("SessionState", () => {
  it("starts a session and seeds the history ribbon", async () => {
    const state = new SessionState(clientReturning(payload({})));
    await state.start(A2);
    expect(state.current?.revision).toBe(0);
    expect(state.history).toEqual([{ vertex: null, revision: 0 }]);
  });

  it("appends to history on confirmed mutation", async () => {
    const state = new SessionState(
      clientReturning(payload({}), payload({ revision: 1, path: [1] })),
    );
    await state.start(A2);
    await state.mutate(1);
    expect(state.history.map((h) => h.vertex)).toEqual([null, 1]);
    expect(state.current?.revision).toBe(1);
  });

  it("rejects frozen or out-of-range vertices without a request", async () => {
    const state = new SessionState(clientReturning(payload({})));
    await state.start(A2);
    await expect(state.mutate(3)).rejects.toThrow("frozen or out of range");
    expect(state.history).toHaveLength(1);
  });

  it("drops stale payloads (monotone revision)", async () => {
    const state = new SessionState(clientReturning(payload({ revision: 5, path: [1] })));
    await state.start(A2);
    const accepted = state.accept(payload({ revision: 3 }));
    expect(accepted).toBe(false);
    expect(state.current?.revision).toBe(5);
  });

  it("notifies subscribers only on accepted payloads", async () => {
    const state = new SessionState(clientReturning(payload({})));
    const seen: number[] = [];
    state.subscribe((p) => seen.push(p.revision));
    await state.start(A2);
    state.accept(payload({ revision: 0 })); // stale duplicate
    state.accept(payload({ revision: 2, path: [1, 2] }));
    expect(seen).toEqual([0, 2]);
  });

  it("undo pops the ribbon and reports canUndo from the path", async () => {
    const state = new SessionState(
      clientReturning(
        payload({}),
        payload({ revision: 1, path: [1] }),
        payload({ revision: 2, path: [] }),
      ),
    );
    await state.start(A2);
    expect(state.canUndo()).toBe(false);
    await state.mutate(1);
    expect(state.canUndo()).toBe(true);
    await state.undo();
    expect(state.history.map((h) => h.vertex)).toEqual([null]);
    expect(state.canUndo()).toBe(false);
  });
});
