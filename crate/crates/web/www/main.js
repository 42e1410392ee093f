import init, { tropical_svg, painted_svg, multiplihedron_svg, multiplihedron_json } from "./pkg/tropaint_web.js";

const $ = (id) => document.getElementById(id);

function show(target, run) {
  try {
    $(target).innerHTML = run();
  } catch (e) {
    $(target).innerHTML = "";
    const p = document.createElement("p");
    p.className = "err";
    p.textContent = String(e.message ?? e);
    $(target).append(p);
  }
}

await init();

$("draw-tropical").onclick = () =>
  show("tropical", () => tropical_svg($("config").value, $("eta").value, $("bbox").value));

$("draw-painted").onclick = () =>
  show("painted", () =>
    painted_svg($("config").value, $("eta").value, $("c").value, $("alpha").value, $("bbox").value));

$("draw-multiplihedron").onclick = () => {
  $("trees").textContent = "";
  show("multiplihedron", () => {
    const m = Number($("m").value);
    const svg = multiplihedron_svg(m);
    const info = JSON.parse(multiplihedron_json(m));
    $("trees").textContent =
      `f-vector ${JSON.stringify(info.lattice.f_vector)}\nvertices:\n  ` + info.vertices.join("\n  ");
    return svg;
  });
};
