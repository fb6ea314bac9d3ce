// Accordion item: clicking the header toggles the panel; collapsing simply
// restores the closed state. Content can render lazily on first expand.

export interface AccordionOptions {
  header: HTMLElement;
  render: (panel: HTMLElement) => void | Promise<void>;
  onExpand?: () => void;
}

export function accordionItem(options: AccordionOptions): HTMLElement {
  const item = document.createElement("div");
  item.className = "accordion-item";
  const button = document.createElement("button");
  button.className = "accordion-header";
  button.append(options.header);
  const panel = document.createElement("div");
  panel.className = "accordion-panel";
  panel.hidden = true;
  let rendered = false;

  button.addEventListener("click", () => {
    const opening = panel.hidden === true;
    panel.hidden = !opening;
    item.classList.toggle("open", opening);
    if (opening) {
      options.onExpand?.();
      if (!rendered) {
        rendered = true;
        void options.render(panel);
      }
    }
  });

  item.append(button, panel);
  return item;
}
