import init, { load, toggle_edge, describe, interval, analyze } from "./pkg/betweenness_web.js";

const svg = document.getElementById("canvas");
const NS = "http://www.w3.org/2000/svg";
const W = 520, H = 440, R = 17;

let g6 = "";
let picked = [];
let highlight = null;

const $ = (id) => document.getElementById(id);
const mode = () => document.querySelector("input[name=mode]:checked").value;

function call(f, ...args) {
  try {
    $("error").textContent = "";
    return f(...args);
  } catch (e) {
    $("error").textContent = String(e);
    return null;
  }
}

function positions(n) {
  const cx = W / 2, cy = H / 2, rad = Math.min(W, H) / 2 - 40;
  return Array.from({ length: n }, (_, i) => {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / n;
    return [cx + rad * Math.cos(a), cy + rad * Math.sin(a)];
  });
}

function el(tag, attrs, parent) {
  const e = document.createElementNS(NS, tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  parent.appendChild(e);
  return e;
}

function draw() {
  const info = JSON.parse(call(describe, g6) ?? '{"n":0,"edges":[]}');
  const pos = positions(info.n);
  svg.replaceChildren();
  const layer = new Map();
  if (highlight) for (const [x, d] of highlight.vertices) layer.set(x, d);
  for (const [u, v] of info.edges) {
    // an edge lies on a geodesic iff its ends are in consecutive layers
    const onPath = layer.has(u) && layer.has(v) && Math.abs(layer.get(u) - layer.get(v)) === 1;
    el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1], class: "edge" + (onPath ? " on-path" : "") }, svg);
  }
  pos.forEach(([x, y], i) => {
    let cls = "vertex";
    if (layer.has(i)) cls += highlight && (i === highlight.u || i === highlight.v) ? " endpoint" : " in-interval";
    if (picked.includes(i)) cls += " selected";
    const grp = el("g", { class: cls, "data-v": i }, svg);
    el("circle", { cx: x, cy: y, r: R }, grp);
    el("text", { x, y }, grp).textContent = i;
    grp.addEventListener("click", () => pick(i));
  });
  $("g6").textContent = g6;
  $("status").textContent = info.connected ? "" : "graph is disconnected";
}

function pick(v) {
  picked.push(v);
  if (picked.length < 2) return draw();
  const [a, b] = picked;
  picked = [];
  if (mode() === "edit") {
    if (a !== b) {
      const next = call(toggle_edge, g6, a, b);
      if (next) setGraph(next);
    }
    return draw();
  }
  const res = call(interval, g6, a, b);
  highlight = res ? JSON.parse(res) : null;
  draw();
  if (highlight) {
    const members = highlight.vertices.map(([x]) => x).join(", ");
    $("status").textContent = `I(${a},${b}) = {${members}}, d = ${highlight.distance}`;
  }
}

function row(table, name, ok, why) {
  const tr = document.createElement("tr");
  tr.innerHTML = `<td>${name}</td><td class="${ok ? "yes" : "no"}">${ok ? "yes" : "no"}</td><td class="why"></td>`;
  tr.lastChild.textContent = why ?? "";
  table.appendChild(tr);
}

function describeWitness(w) {
  if (!w) return "";
  if (w.evidence === "condition") return `${w.kind} fails at apex ${w.apex}: ${w.missing}`;
  if (w.evidence === "isometric_cycle") return `isometric cycle ${w.cycle.join("-")}`;
  if (w.evidence === "induced_pattern") return `induced ${w.pattern} on {${w.vertices.join(", ")}}`;
  return JSON.stringify(w);
}

function refreshPanels() {
  $("classes").replaceChildren();
  $("axioms").replaceChildren();
  let res;
  try {
    res = JSON.parse(analyze(g6));
  } catch (e) {
    row($("classes"), String(e), false, "");
    return;
  }
  for (const c of res.classification.classes) {
    row($("classes"), c.class.replaceAll("_", " "), c.verdict, describeWitness(c.witness));
  }
  for (const a of res.axioms) {
    row($("axioms"), a.axiom, a.holds, a.holds ? "" : a.explanation.replace(/^[^:]*: /, ""));
  }
}

function setGraph(next) {
  g6 = next;
  highlight = null;
  picked = [];
  refreshPanels();
  draw();
}

function loadExpr(expr) {
  const next = call(load, expr.trim());
  if (next) setGraph(next);
}

$("load").addEventListener("click", () => loadExpr($("expr").value));
$("expr").addEventListener("keydown", (e) => e.key === "Enter" && loadExpr($("expr").value));
$("preset").addEventListener("change", (e) => {
  if (!e.target.value) return;
  $("expr").value = e.target.value;
  loadExpr(e.target.value);
});
$("add-vertex").addEventListener("click", () => {
  // graph6 of the same graph plus an isolated vertex: rebuild from edges
  const info = JSON.parse(describe(g6));
  let next = call(load, `path:${info.n + 1}`);
  for (let i = 0; i < info.n; i++) next = toggle_edge(next, i, i + 1);
  for (const [u, v] of info.edges) next = toggle_edge(next, u, v);
  setGraph(next);
});

await init();
loadExpr($("expr").value);
