/** In-memory binary mask bitmap edited by the brush / eraser tools. */

export class MaskBitmap {
  readonly data: Uint8Array; // row-major, 0 or 1

  constructor(readonly width: number, readonly height: number, data?: Uint8Array) {
    if (data !== undefined) {
      if (data.length !== width * height) throw new Error("mask data size mismatch");
      this.data = data;
    } else {
      this.data = new Uint8Array(width * height);
    }
  }

  get(x: number, y: number): number {
    return this.data[y * this.width + x];
  }

  /** Paint (value=1) or erase (value=0) a disk of the given radius. */
  applyBrush(cx: number, cy: number, radius: number, value: 0 | 1): void {
    const x0 = Math.max(0, Math.floor(cx - radius));
    const x1 = Math.min(this.width - 1, Math.ceil(cx + radius));
    const y0 = Math.max(0, Math.floor(cy - radius));
    const y1 = Math.min(this.height - 1, Math.ceil(cy + radius));
    const r2 = radius * radius;
    for (let y = y0; y <= y1; y++) {
      for (let x = x0; x <= x1; x++) {
        const dx = x - cx;
        const dy = y - cy;
        if (dx * dx + dy * dy <= r2) this.data[y * this.width + x] = value;
      }
    }
  }

  clone(): MaskBitmap {
    return new MaskBitmap(this.width, this.height, this.data.slice());
  }

  equals(other: MaskBitmap): boolean {
    if (other.width !== this.width || other.height !== this.height) return false;
    return this.data.every((v, i) => v === other.data[i]);
  }

  /** 8-bit grayscale pixels (0 / 255), the PNG payload the service expects. */
  toGray(): Uint8Array {
    const out = new Uint8Array(this.data.length);
    for (let i = 0; i < this.data.length; i++) out[i] = this.data[i] ? 255 : 0;
    return out;
  }

  static fromGray(width: number, height: number, gray: Uint8Array): MaskBitmap {
    const data = new Uint8Array(width * height);
    for (let i = 0; i < data.length; i++) data[i] = gray[i] >= 128 ? 1 : 0;
    return new MaskBitmap(width, height, data);
  }
}
