// Small force-directed layout for the quiver and neighborhood views.
// Frozen vertices are pinned evenly on the periphery: they are context,
// not actors, and should never wander into the mutable core.

export interface LayoutPoint {
  id: number;
  x: number;
  y: number;
  pinned: boolean;
}

export interface LayoutEdge {
  a: number;
  b: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations?: number;
  idealEdge?: number;
}

export function initialPositions(
  ids: number[],
  pinnedIds: Set<number>,
  width: number,
  height: number,
): LayoutPoint[] {
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.46;
  const pinned = ids.filter((id) => pinnedIds.has(id));
  const free = ids.filter((id) => !pinnedIds.has(id));
  const points: LayoutPoint[] = [];
  pinned.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / Math.max(pinned.length, 1);
    points.push({ id, x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle), pinned: true });
  });
  free.forEach((id, i) => {
    // deterministic jittered ring so identical payloads lay out identically
    const angle = (2 * Math.PI * i) / Math.max(free.length, 1) + 0.5;
    const r = radius * 0.45 + (i % 3) * 8;
    points.push({ id, x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle), pinned: false });
  });
  return points;
}

export function runLayout(points: LayoutPoint[], edges: LayoutEdge[], options: LayoutOptions): LayoutPoint[] {
  const { width, height } = options;
  const iterations = options.iterations ?? 150;
  const ideal = options.idealEdge ?? Math.min(width, height) / 4;
  const byId = new Map(points.map((p) => [p.id, p]));
  for (let step = 0; step < iterations; step++) {
    const cooling = 1 - step / iterations;
    const fx = new Map<number, number>();
    const fy = new Map<number, number>();
    for (const p of points) {
      fx.set(p.id, 0);
      fy.set(p.id, 0);
    }
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const p = points[i];
        const q = points[j];
        const dx = p.x - q.x;
        const dy = p.y - q.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const push = (ideal * ideal) / dist / dist;
        fx.set(p.id, fx.get(p.id)! + dx * push);
        fy.set(p.id, fy.get(p.id)! + dy * push);
        fx.set(q.id, fx.get(q.id)! - dx * push);
        fy.set(q.id, fy.get(q.id)! - dy * push);
      }
    }
    for (const e of edges) {
      const p = byId.get(e.a);
      const q = byId.get(e.b);
      if (!p || !q) continue;
      const dx = p.x - q.x;
      const dy = p.y - q.y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - ideal) / dist / 8;
      fx.set(p.id, fx.get(p.id)! - dx * pull);
      fy.set(p.id, fy.get(p.id)! - dy * pull);
      fx.set(q.id, fx.get(q.id)! + dx * pull);
      fy.set(q.id, fy.get(q.id)! + dy * pull);
    }
    for (const p of points) {
      if (p.pinned) continue;
      p.x += fx.get(p.id)! * cooling;
      p.y += fy.get(p.id)! * cooling;
      p.x = Math.min(Math.max(p.x, 20), width - 20);
      p.y = Math.min(Math.max(p.y, 20), height - 20);
    }
  }
  return points;
}
