import init, { expansion_json, collection_json, ext_table_json } from "./pkg/mckay_wasm.js";

const $ = (id) => document.getElementById(id);

function el(tag, attrs = {}, children = []) {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "text") node.textContent = value;
    else if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) node.appendChild(child);
  return node;
}

function table(headers, rows, leftCols = 1) {
  const t = el("table");
  const head = el("tr");
  headers.forEach((h, idx) => head.appendChild(
    el("th", { text: h, class: idx < leftCols ? "name" : "" })));
  t.appendChild(head);
  for (const row of rows) {
    const tr = el("tr");
    row.forEach((cell, idx) => tr.appendChild(
      el("td", { text: cell, class: idx < leftCols ? "name" : "" })));
    t.appendChild(tr);
  }
  return t;
}

function renderGraph(b) {
  const gap = 86, radius = 17, x0 = 40, y = 46;
  const width = Math.max(220, x0 * 2 + gap * Math.max(0, b.length - 1));
  const svgNS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(svgNS, "svg");
  svg.setAttribute("width", Math.min(width, 1100));
  svg.setAttribute("height", 92);
  svg.setAttribute("viewBox", `0 0 ${width} 92`);
  b.forEach((bt, idx) => {
    const cx = x0 + idx * gap;
    if (idx > 0) {
      const edge = document.createElementNS(svgNS, "line");
      edge.setAttribute("x1", cx - gap + radius);
      edge.setAttribute("y1", y);
      edge.setAttribute("x2", cx - radius);
      edge.setAttribute("y2", y);
      edge.setAttribute("stroke", "#5d6b7e");
      svg.appendChild(edge);
    }
    const vertex = document.createElementNS(svgNS, "circle");
    vertex.setAttribute("cx", cx);
    vertex.setAttribute("cy", y);
    vertex.setAttribute("r", radius);
    vertex.setAttribute("fill", "#fff");
    vertex.setAttribute("stroke", "#2458c5");
    vertex.setAttribute("stroke-width", "1.5");
    svg.appendChild(vertex);
    const label = document.createElementNS(svgNS, "text");
    label.setAttribute("x", cx);
    label.setAttribute("y", y + 4);
    label.setAttribute("text-anchor", "middle");
    label.textContent = `−${bt}`;
    svg.appendChild(label);
    const sub = document.createElementNS(svgNS, "text");
    sub.setAttribute("x", cx);
    sub.setAttribute("y", y + 36);
    sub.setAttribute("text-anchor", "middle");
    sub.setAttribute("fill", "#5d6b7e");
    sub.textContent = `E${idx + 1}`;
    svg.appendChild(sub);
  });
  return svg;
}

function renderExpansion(rep) {
  $("graph").replaceChildren(renderGraph(rep.b));

  const rows = rep.i.map((_, t) => [
    String(t),
    t >= 1 && t <= rep.b.length ? String(rep.b[t - 1]) : "·",
    String(rep.i[t]),
    String(rep.j[t]),
  ]);
  $("sequences").replaceChildren(
    el("p", { text: `n/q = [${rep.b.join(", ")}], q' = ${rep.q_prime}, r = ${rep.b.length}` }),
    table(["t", "b", "i", "j"], rows, 0));

  const specials = new Set(rep.specials);
  const cells = [];
  for (let v = 0; v < rep.n; v++) {
    cells.push(el("span", {
      text: String(v),
      class: specials.has(v) ? "cell special" : "cell",
      title: specials.has(v) ? `residue ${v} is special` : `E_${v} is a collection member`,
    }));
  }
  $("strip").replaceChildren(...cells);

  $("digits").replaceChildren(table(
    ["d", "digits", "f"],
    rep.digits.map((row) => [String(row.d), row.digits.join(","), String(row.f)]),
    0));
}

function renderCollection(rep) {
  const objects = rep.collection ?? [];
  if (objects.length === 0) {
    $("collection").replaceChildren(el("p", {
      text: "Empty: every character is special (the subgroup of SL(2) case).",
    }));
    $("kmatrix").replaceChildren();
    return;
  }
  $("collection").replaceChildren(table(
    ["E_d", "level", "length", "twist", "characters"],
    objects.map((o) => [
      `E_${o.d}`, String(o.level), String(o.length), String(o.twist), o.chars.join(","),
    ])));
  const labels = rep.non_specials ?? [];
  $("kmatrix").replaceChildren(table(
    ["", ...labels.map(String)],
    (rep.k_matrix ?? []).map((row, idx) => [String(labels[idx]), ...row.map(String)])));
}

function renderExtTable(rep) {
  const rows = rep.ext_table ?? [];
  if (rows.length === 0) {
    $("exttable").replaceChildren(el("p", { text: "No pairs: the collection is empty." }));
  } else {
    const labels = [...new Set(rows.map((r) => r.d))];
    const byPair = new Map(rows.map((r) => [`${r.d}:${r.d_prime}`, r]));
    const grid = labels.map((d) => [
      `E_${d}`,
      ...labels.map((dp) => {
        const r = byPair.get(`${d}:${dp}`);
        const triple = `${r.hom},${r.ext1},${r.ext2}`;
        return r.oracle_agrees === false ? `${triple} (!)` : triple;
      }),
    ]);
    $("exttable").replaceChildren(
      table(["from \\ to", ...labels.map((d) => `E_${d}`)], grid),
      el("p", {
        class: "grid-note",
        text: "Entry (hom, ext¹, ext²) for Ext*(row, column); (!) marks an oracle disagreement.",
      }));
  }

  const checks = rep.checks ?? [];
  const list = el("ul");
  for (const check of checks) {
    const li = el("li");
    li.appendChild(el("span", { text: check.pass ? "PASS " : "FAIL ", class: check.pass ? "pass" : "fail" }));
    li.appendChild(el("code", { text: check.name }));
    li.appendChild(document.createTextNode(` ${check.detail}`));
    list.appendChild(li);
  }
  const failed = checks.filter((c) => !c.pass).length;
  $("checks").replaceChildren(
    el("p", {
      text: failed === 0
        ? `All ${checks.length} checks pass.`
        : `${failed} of ${checks.length} checks fail.`,
      class: failed === 0 ? "pass" : "fail",
    }),
    list);
}

function showError(message) {
  const box = $("error");
  box.textContent = message;
  box.style.display = "block";
}

function clearError() {
  $("error").style.display = "none";
}

function refresh() {
  const n = Number($("n").value);
  const q = Number($("q").value);
  const oracle = $("oracle").checked;
  if (!Number.isInteger(n) || !Number.isInteger(q) || n < 2 || q < 1) {
    showError("n and q must be integers with n ≥ 2 and q ≥ 1.");
    return;
  }
  if (n > 1000) {
    showError("Keep n ≤ 1000; the Ext table is quadratic in the collection size.");
    return;
  }
  try {
    const expansion = JSON.parse(expansion_json(n, q));
    const collection = JSON.parse(collection_json(n, q));
    // the resolution cross-check is cubic per pair; skip it automatically
    // once the collection gets large
    const useOracle = oracle && n <= 120;
    const ext = JSON.parse(ext_table_json(n, q, useOracle));
    clearError();
    renderExpansion(expansion);
    renderCollection(collection);
    renderExtTable(ext);
  } catch (err) {
    showError(typeof err === "string" ? err : String(err));
  }
}

let pending = null;
function scheduleRefresh() {
  clearTimeout(pending);
  pending = setTimeout(refresh, 120);
}

async function main() {
  await init();
  for (const id of ["n", "q", "oracle"]) $(id).addEventListener("input", scheduleRefresh);
  for (const button of document.querySelectorAll(".presets button")) {
    button.addEventListener("click", () => {
      $("n").value = button.dataset.n;
      $("q").value = button.dataset.q;
      refresh();
    });
  }
  refresh();
}

main();
