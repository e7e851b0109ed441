/** DOM wiring: three aligned panes (mask, orientation preview, result) over
 * one shared image coordinate system, plus the tool bar and palette strip.
 */

import { ServiceClient, ServiceError } from "./api.js";
import { MaskBitmap } from "./mask.js";
import { Palette, PaletteView } from "./palette.js";
import { Debouncer, EditorState, GenerationQueue, MASK_DEBOUNCE_MS, Tool, initialState } from "./state.js";
import { Point, pathToStroke } from "./strokes.js";

function el<K extends keyof HTMLElementTagNameMap>(tag: K, cls?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  return node;
}

function setPaneImage(canvas: HTMLCanvasElement, b64: string): void {
  const img = new Image();
  img.onload = () => {
    const ctx = canvas.getContext("2d")!;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.drawImage(img, 0, 0, canvas.width, canvas.height);
  };
  img.src = "data:image/png;base64," + b64;
}

export class EditorApp {
  state: EditorState = initialState();
  mask: MaskBitmap | null = null;
  private queue: GenerationQueue | null = null;
  private readonly debounce = new Debouncer(MASK_DEBOUNCE_MS);
  private readonly maskPane = el("canvas", "pane");
  private readonly previewPane = el("canvas", "pane");
  private readonly resultPane = el("canvas", "pane");
  private readonly banner = el("div", "banner");
  private palette: Palette;
  private path: Point[] = [];
  private painting = false;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ServiceClient,
  ) {
    const view: PaletteView = {
      showEntries: (entries) => this.renderStrip(entries.map((e) => e)),
      showImportPrompt: () => this.note("appearance library is empty — import references on the server"),
    };
    this.palette = new Palette(client, view, (refId) => {
      this.queue?.request({ appearance_ref_id: refId });
    });
    this.buildDom();
  }

  private buildDom(): void {
    const tools = el("div", "tools");
    for (const tool of ["mask-brush", "mask-eraser", "stroke", "picker"] as Tool[]) {
      const b = el("button");
      b.textContent = tool;
      b.onclick = () => {
        this.state.tool = tool;
      };
      tools.appendChild(b);
    }
    const panes = el("div", "panes");
    for (const c of [this.maskPane, this.previewPane, this.resultPane]) panes.appendChild(c);
    this.root.append(this.banner, tools, panes);
    this.maskPane.addEventListener("pointerdown", (e) => this.pointerDown(e));
    this.maskPane.addEventListener("pointermove", (e) => this.pointerMove(e));
    this.maskPane.addEventListener("pointerup", () => this.pointerUp());
  }

  /** Map a pointer event in any pane to image coordinates (shared system). */
  toImage(e: { offsetX: number; offsetY: number }, pane: HTMLCanvasElement): Point {
    const sx = pane.width / pane.clientWidth;
    const sy = pane.height / pane.clientHeight;
    return [e.offsetX * sx, e.offsetY * sy];
  }

  async open(imageB64: string, maskB64?: string): Promise<void> {
    const info = await this.client.createSession(imageB64, maskB64);
    this.state.sessionId = info.id;
    const [h, w] = info.hw;
    for (const c of [this.maskPane, this.previewPane, this.resultPane]) {
      c.width = w;
      c.height = h;
    }
    this.mask = new MaskBitmap(w, h);
    this.state.orientationPreviewB64 = info.orientation_preview;
    setPaneImage(this.previewPane, info.orientation_preview);
    this.queue = new GenerationQueue(
      this.client,
      info.id,
      (res) => {
        this.state.lastResultB64 = res.image;
        setPaneImage(this.resultPane, res.image);
      },
      (err) => this.showError(err),
    );
  }

  private pointerDown(e: PointerEvent): void {
    this.painting = true;
    const p = this.toImage(e, this.maskPane);
    if (this.state.tool === "stroke") this.path = [p];
    else this.applyBrushAt(p);
  }

  private pointerMove(e: PointerEvent): void {
    if (!this.painting) return;
    const p = this.toImage(e, this.maskPane);
    if (this.state.tool === "stroke") this.path.push(p);
    else this.applyBrushAt(p);
  }

  private pointerUp(): void {
    if (!this.painting) return;
    this.painting = false;
    if (this.state.tool === "stroke") void this.submitStroke();
  }

  private applyBrushAt([x, y]: Point): void {
    if (!this.mask) return;
    const value = this.state.tool === "mask-eraser" ? 0 : 1;
    this.mask.applyBrush(x, y, this.state.brushRadius, value);
    this.drawMask();
    // expensive upload is debounced; the local canvas stays live
    this.debounce.schedule(() => this.uploadMask());
  }

  private drawMask(): void {
    if (!this.mask) return;
    const ctx = this.maskPane.getContext("2d")!;
    const img = ctx.createImageData(this.mask.width, this.mask.height);
    for (let i = 0; i < this.mask.data.length; i++) {
      const v = this.mask.data[i] ? 255 : 0;
      img.data[4 * i] = v;
      img.data[4 * i + 1] = v;
      img.data[4 * i + 2] = v;
      img.data[4 * i + 3] = 255;
    }
    ctx.putImageData(img, 0, 0);
  }

  private uploadMask(): void {
    if (!this.mask || !this.queue) return;
    this.queue.request({ mask: this.maskToB64() });
  }

  /** Canvas-backed PNG encoding (exact for binary grayscale content). */
  private maskToB64(): string {
    const c = document.createElement("canvas");
    c.width = this.mask!.width;
    c.height = this.mask!.height;
    const ctx = c.getContext("2d")!;
    const img = ctx.createImageData(c.width, c.height);
    const gray = this.mask!.toGray();
    for (let i = 0; i < gray.length; i++) {
      img.data[4 * i] = gray[i];
      img.data[4 * i + 1] = gray[i];
      img.data[4 * i + 2] = gray[i];
      img.data[4 * i + 3] = 255;
    }
    ctx.putImageData(img, 0, 0);
    return c.toDataURL("image/png").split(",", 2)[1];
  }

  private async submitStroke(): Promise<void> {
    if (!this.state.sessionId) return;
    const stroke = pathToStroke(this.path, this.state.brushRadius);
    this.path = [];
    if (stroke === null) return; // single-point click: ignored
    try {
      const res = await this.client.submitStrokes(this.state.sessionId, [stroke]);
      this.state.orientationPreviewB64 = res.orientation_preview;
      setPaneImage(this.previewPane, res.orientation_preview);
      this.queue?.request({});
    } catch (err) {
      this.showError(err);
    }
  }

  pickColor(rgbHex: string): Promise<void> {
    return this.palette.pickColor(rgbHex);
  }

  private renderStrip(entries: { id: string; thumbnail: string }[]): void {
    let strip = this.root.querySelector<HTMLDivElement>(".strip");
    if (!strip) {
      strip = el("div", "strip");
      this.root.appendChild(strip);
    }
    strip.replaceChildren();
    for (const entry of entries) {
      const img = el("img", "thumb");
      img.src = "data:image/png;base64," + entry.thumbnail;
      img.title = entry.id;
      img.onclick = () => void this.palette.pickEntry(entry.id);
      strip.appendChild(img);
    }
  }

  private note(text: string): void {
    this.banner.textContent = text;
    this.banner.dataset.kind = "note";
  }

  private showError(err: unknown): void {
    const msg = err instanceof ServiceError ? `${err.code}: ${err.message}` : String(err);
    this.banner.textContent = `request failed (${msg}) — local edits kept, retry when ready`;
    this.banner.dataset.kind = "error";
  }
}

export function mount(root: HTMLElement, baseUrl: string): EditorApp {
  return new EditorApp(root, new ServiceClient(baseUrl));
}
