// DOM wiring for the mutation explorer. One session per tab; every view
// update is driven by a confirmed server payload.

import { ApiClient, ApiError, MatrixPayload, SeedPayload } from "./api";
import { SessionState } from "./state";
import { projectSeed, projectNeighborhood, QuiverCanvasModel } from "./model";
import { initialPositions, runLayout, LayoutPoint } from "./layout";

const DEFAULT_MATRIX: MatrixPayload = { n: 2, r: 2, matrix: [[0, 1], [-1, 0]] };
const VERTEX_RADIUS = 18;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function toast(message: string): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.classList.add("visible");
  setTimeout(() => box.classList.remove("visible"), 4000);
}

class ExplorerApp {
  private state: SessionState;
  private layout: LayoutPoint[] = [];
  private model: QuiverCanvasModel | null = null;

  constructor(private client: ApiClient) {
    this.state = new SessionState(client);
    this.state.subscribe((payload) => this.render(payload));
  }

  async start(): Promise<void> {
    const payload = await this.state.start(DEFAULT_MATRIX);
    this.resetLayout(payload);
    this.render(payload);
  }

  private resetLayout(payload: SeedPayload): void {
    const ids = Array.from({ length: payload.quiver.n }, (_, i) => i + 1);
    const pinned = new Set(payload.quiver.frozen);
    const canvas = el<HTMLCanvasElement>("quiver");
    const points = initialPositions(ids, pinned, canvas.width, canvas.height);
    const edges = payload.quiver.arrows.map(([a, , b]) => ({ a, b }));
    this.layout = runLayout(points, edges, {
      width: canvas.width,
      height: canvas.height,
    });
  }

  private render(payload: SeedPayload): void {
    this.model = projectSeed(payload);
    this.drawQuiver();
    this.renderVariables();
    this.renderGVectors();
    this.renderHistory();
    el<HTMLButtonElement>("undo").disabled = !this.state.canUndo();
    void this.refreshNeighborhood();
  }

  private drawQuiver(): void {
    if (!this.model) return;
    const canvas = el<HTMLCanvasElement>("quiver");
    const ctx = canvas.getContext("2d")!;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    const at = new Map(this.layout.map((p) => [p.id, p]));
    for (const arrow of this.model.arrows) {
      const from = at.get(arrow.from);
      const to = at.get(arrow.to);
      if (!from || !to) continue;
      ctx.beginPath();
      ctx.moveTo(from.x, from.y);
      ctx.lineTo(to.x, to.y);
      ctx.strokeStyle = "#888";
      ctx.lineWidth = Math.min(arrow.multiplicity, 4);
      ctx.stroke();
      const mx = (from.x + 2 * to.x) / 3;
      const my = (from.y + 2 * to.y) / 3;
      ctx.fillStyle = "#555";
      ctx.fillText(arrow.multiplicity > 1 ? `×${arrow.multiplicity}` : "", mx, my - 4);
      const angle = Math.atan2(to.y - from.y, to.x - from.x);
      ctx.beginPath();
      ctx.moveTo(mx, my);
      ctx.lineTo(mx - 8 * Math.cos(angle - 0.4), my - 8 * Math.sin(angle - 0.4));
      ctx.lineTo(mx - 8 * Math.cos(angle + 0.4), my - 8 * Math.sin(angle + 0.4));
      ctx.fill();
    }
    for (const vertex of this.model.vertices) {
      const p = at.get(vertex.vertex);
      if (!p) continue;
      ctx.beginPath();
      ctx.arc(p.x, p.y, VERTEX_RADIUS, 0, 2 * Math.PI);
      ctx.fillStyle = vertex.frozen ? "#cfe2ff" : "#ffe9a8";
      ctx.fill();
      ctx.strokeStyle = vertex.frozen ? "#4a79c4" : "#c49a2a";
      ctx.setLineDash(vertex.frozen ? [4, 3] : []);
      ctx.stroke();
      ctx.setLineDash([]);
      ctx.fillStyle = "#222";
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(String(vertex.vertex), p.x, p.y);
    }
  }

  private renderVariables(): void {
    if (!this.model) return;
    const list = el<HTMLUListElement>("variables");
    list.innerHTML = "";
    for (const variable of this.model.variables) {
      const item = document.createElement("li");
      const code = document.createElement("code");
      code.textContent = `u${variable.vertex} = ${variable.text}`;
      code.dataset.fullText = variable.fullText;
      item.appendChild(code);
      if (variable.truncated) {
        const expand = document.createElement("button");
        expand.textContent = `show all ${variable.termCount} terms`;
        expand.addEventListener("click", () => {
          code.textContent = `u${variable.vertex} = ${variable.fullText}`;
          expand.remove();
        });
        item.appendChild(expand);
      }
      list.appendChild(item);
    }
  }

  private renderGVectors(): void {
    if (!this.model) return;
    const table = el<HTMLTableElement>("gvectors");
    table.innerHTML = "";
    this.model.gvectors.forEach((row, i) => {
      const tr = document.createElement("tr");
      const name = document.createElement("td");
      name.textContent = `g${i + 1}`;
      tr.appendChild(name);
      const value = document.createElement("td");
      value.textContent = `[${row.join(", ")}]`;
      tr.appendChild(value);
      table.appendChild(tr);
    });
  }

  private renderHistory(): void {
    if (!this.model) return;
    const ribbon = el<HTMLDivElement>("history");
    ribbon.textContent = this.model.path.length
      ? "path: " + this.model.path.join(" → ")
      : "path: (initial seed)";
  }

  private async refreshNeighborhood(): Promise<void> {
    const depth = Number(el<HTMLSelectElement>("depth").value);
    try {
      const payload = await this.client.neighborhood(this.state.sessionId, depth);
      if (this.model && payload.revision !== this.model.revision) return; // stale
      const view = projectNeighborhood(payload);
      const info = el<HTMLDivElement>("neighborhood");
      info.textContent =
        `${view.nodes.length} seeds within depth ${depth}` +
        (view.truncated ? " (truncated)" : "");
    } catch (error) {
      toast(String(error));
    }
  }

  async onCanvasClick(event: MouseEvent): Promise<void> {
    if (!this.model) return;
    const canvas = el<HTMLCanvasElement>("quiver");
    const rect = canvas.getBoundingClientRect();
    const x = event.clientX - rect.left;
    const y = event.clientY - rect.top;
    const hit = this.layout.find((p) => Math.hypot(p.x - x, p.y - y) <= VERTEX_RADIUS);
    if (!hit) return;
    if (!this.state.isMutable(hit.id)) {
      toast(`vertex ${hit.id} is frozen`);
      return;
    }
    try {
      await this.state.mutate(hit.id);
    } catch (error) {
      toast(error instanceof ApiError ? error.detail : String(error));
    }
  }

  async onUndo(): Promise<void> {
    try {
      await this.state.undo();
    } catch (error) {
      toast(error instanceof ApiError ? error.detail : String(error));
    }
  }

  async onLoadMatrix(): Promise<void> {
    const text = el<HTMLTextAreaElement>("matrix-input").value;
    try {
      const matrix = JSON.parse(text) as MatrixPayload;
      const payload = await this.state.start(matrix);
      this.resetLayout(payload);
      this.render(payload);
    } catch (error) {
      toast(error instanceof ApiError ? error.detail : String(error));
    }
  }
}

async function boot(): Promise<void> {
  const client = new ApiClient("");
  const app = new ExplorerApp(client);
  el<HTMLCanvasElement>("quiver").addEventListener("click", (e) => void app.onCanvasClick(e));
  el<HTMLButtonElement>("undo").addEventListener("click", () => void app.onUndo());
  el<HTMLButtonElement>("load").addEventListener("click", () => void app.onLoadMatrix());
  el<HTMLSelectElement>("depth").addEventListener("change", () => void app.start);
  try {
    await client.health();
    await app.start();
  } catch {
    toast("backend unreachable -- run `clusterlab serve` first");
  }
}

if (typeof document !== "undefined") {
  void boot();
}
