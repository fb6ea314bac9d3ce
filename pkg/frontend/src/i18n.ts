import { Lang, MESSAGES, MessageKey, RTL_LANGS } from "./catalog.js";

let current: Lang = "en";

export function language(): Lang {
  return current;
}

export function setLanguage(lang: Lang): void {
  current = lang;
  document.documentElement.lang = lang;
  document.documentElement.dir = RTL_LANGS.includes(lang) ? "rtl" : "ltr";
}

export function t(key: MessageKey): string {
  return MESSAGES[current][key];
}

// Creates an element whose text stays bound to a catalog key. Re-applying
// translations walks every [data-i18n] node, so no stale language leaks.
export function translated<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  key: MessageKey,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.dataset.i18n = key;
  node.textContent = t(key);
  return node;
}

export function applyTranslations(root: ParentNode): void {
  root.querySelectorAll<HTMLElement>("[data-i18n]").forEach((node) => {
    node.textContent = t(node.dataset.i18n as MessageKey);
  });
  root.querySelectorAll<HTMLElement>("[data-i18n-placeholder]").forEach((node) => {
    (node as HTMLInputElement).placeholder = t(
      node.dataset.i18nPlaceholder as MessageKey,
    );
  });
}

export function placeholderKey(node: HTMLInputElement | HTMLTextAreaElement, key: MessageKey): void {
  node.dataset.i18nPlaceholder = key;
  node.placeholder = t(key);
}

// A label wrapping a form control: the caption is a leaf span so
// re-translation never clobbers the embedded control.
export function labeledField(key: MessageKey, field: HTMLElement): HTMLLabelElement {
  const label = document.createElement("label");
  label.append(translated("span", key), field);
  return label;
}
