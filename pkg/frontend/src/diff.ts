/**
 * Word-level diff for title pairs that differ in a small number of words.
 * Returns parallel segment lists so both sides can highlight their changed
 * words. Whitespace is preserved in the segments.
 */

export interface DiffSegment {
  text: string;
  changed: boolean;
}

function splitKeepingWhitespace(text: string): string[] {
  return text.split(/(\s+)/).filter((part) => part.length > 0);
}

export function diffTitles(
  original: string,
  treatment: string,
): { original: DiffSegment[]; treatment: DiffSegment[] } {
  const left = splitKeepingWhitespace(original);
  const right = splitKeepingWhitespace(treatment);

  if (left.length === right.length) {
    return {
      original: left.map((text, i) => ({ text, changed: text !== right[i] })),
      treatment: right.map((text, i) => ({ text, changed: text !== left[i] })),
    };
  }

  // Unequal token counts: mark everything outside the common prefix/suffix.
  let prefix = 0;
  while (prefix < left.length && prefix < right.length && left[prefix] === right[prefix]) {
    prefix++;
  }
  let suffix = 0;
  while (
    suffix < left.length - prefix &&
    suffix < right.length - prefix &&
    left[left.length - 1 - suffix] === right[right.length - 1 - suffix]
  ) {
    suffix++;
  }
  const mark = (tokens: string[]): DiffSegment[] =>
    tokens.map((text, i) => ({
      text,
      changed: i >= prefix && i < tokens.length - suffix,
    }));
  return { original: mark(left), treatment: mark(right) };
}

/** Render diff segments into a container, changed words wrapped in <mark>. */
export function renderSegments(container: HTMLElement, segments: DiffSegment[]): void {
  container.textContent = "";
  for (const segment of segments) {
    if (segment.changed) {
      const mark = container.ownerDocument.createElement("mark");
      mark.textContent = segment.text;
      container.appendChild(mark);
    } else {
      container.appendChild(container.ownerDocument.createTextNode(segment.text));
    }
  }
}
