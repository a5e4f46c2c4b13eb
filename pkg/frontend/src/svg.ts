/** Minimal SVG string assembly: elements, attributes, text escaping. */

export type Attrs = Record<string, string | number>;

export function escapeText(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function attrString(attrs: Attrs): string {
  return Object.entries(attrs)
    .map(([key, value]) => ` ${key}="${typeof value === "number" ? round(value) : escapeText(value)}"`)
    .join("");
}

/** Round pixel coordinates to keep the output compact and deterministic. */
export function round(value: number): string {
  return String(Number(value.toFixed(2)));
}

export function element(tag: string, attrs: Attrs, children: string[] = []): string {
  const open = `<${tag}${attrString(attrs)}>`;
  return children.length === 0 ? `${open.slice(0, -1)}/>` : `${open}${children.join("")}</${tag}>`;
}

export function text(content: string, attrs: Attrs): string {
  return `<text${attrString(attrs)}>${escapeText(content)}</text>`;
}

export function polylinePoints(points: [number, number][]): string {
  return points.map(([x, y]) => `${round(x)},${round(y)}`).join(" ");
}

export function svgDocument(width: number, height: number, children: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" font-family="sans-serif">`,
    ...children,
    "</svg>",
    "",
  ].join("\n");
}
