import init, { evaluate, neutrix_info, quotient } from "./pkg/flexmeadow_web.js";

const $ = (id) => document.getElementById(id);

function show(el, f) {
  try {
    const text = f();
    el.textContent = text;
    el.classList.remove("err");
  } catch (e) {
    el.textContent = String(e.message ?? e);
    el.classList.add("err");
  }
}

// "3/2" -> 1.5
function ratio(s) {
  const [n, d] = s.split("/").map(Number);
  return d === undefined ? n : n / d;
}

// Valuations in [-4, 4]; the neutrix is every x with v(x) beyond its cut,
// so it is shaded to the right. 0 itself sits at +inf.
function drawAxis(info) {
  const c = $("axis");
  const g = c.getContext("2d");
  const w = c.width, h = c.height, lo = -4, hi = 4;
  const px = (v) => 30 + ((v - lo) / (hi - lo)) * (w - 60);
  g.clearRect(0, 0, w, h);
  g.fillStyle = "#4a7";
  if (info.kind === "full") g.fillRect(px(lo), 30, px(hi) - px(lo), 16);
  if (info.kind === "cut") {
    const at = Math.max(lo, Math.min(hi, ratio(info.at)));
    g.fillRect(px(at), 30, px(hi) - px(at), 16);
    g.beginPath();
    g.arc(px(at), 38, 6, 0, 2 * Math.PI);
    g.fillStyle = info.closed ? "#4a7" : "#fff";
    g.fill();
    g.strokeStyle = "#263";
    g.stroke();
  }
  g.fillStyle = "#000";
  g.fillRect(px(lo), 60, px(hi) - px(lo), 1);
  g.font = "12px monospace";
  for (let v = lo; v <= hi; v++) {
    g.fillRect(px(v), 56, 1, 8);
    g.fillText(String(v), px(v) - 4, 78);
  }
  g.fillText("v(x)", w - 30, 78);
  g.fillText("0 (v = +inf)", w - 90, 20);
}

function runEval() {
  show($("eval-out"), () => JSON.parse(evaluate($("model").value, $("term").value, $("binds").value)).value);
}

function runNeutrix() {
  show($("neutrix-out"), () => {
    const info = JSON.parse(neutrix_info($("neutrix").value));
    drawAxis(info);
    return `${info.display} = ${info.r} * ${info.idempotent_part}\n` +
      `idempotent: ${info.idempotent}\ninverse: ${info.inverse}`;
  });
}

function runQuotient() {
  show($("q-out"), () => JSON.parse(quotient($("qa").value, $("qb").value)).value);
}

await init();
for (const id of ["model", "term", "binds"]) $(id).addEventListener("input", runEval);
$("neutrix").addEventListener("input", runNeutrix);
for (const id of ["qa", "qb"]) $(id).addEventListener("input", runQuotient);
runEval();
runNeutrix();
runQuotient();
